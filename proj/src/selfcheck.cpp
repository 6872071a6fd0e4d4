#include <aa/selfcheck.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace aa {

ConstraintSystem hirzebruch_section_system(int n) {
    SurfaceModel s = make_hirzebruch(n);
    BoundaryChain c;
    c.components.push_back(basis_class(s, 0));
    c.component_ids.push_back("Z");
    ConstraintSystem sys;
    sys.angle_count = 1;
    sys.linear = boundary_constraints(s, c);
    for (auto& ineq : curve_constraints(s, c, {{"F", basis_class(s, 1)}}))
        sys.linear.push_back(std::move(ineq));
    sys.quadratic = quadratic_constraint(s, c);
    return sys;
}

ConstraintSystem plane_blowup_system() {
    SurfaceModel s = blow_up(make_projective_plane(), CenterSpec{});
    BoundaryChain c;
    c.components.push_back(basis_class(s, 1)); // the exceptional curve
    c.component_ids.push_back("E");
    DivisorClass line_pullback = pullback(s, basis_class(make_projective_plane(), 0));
    AngleClass L = twisted_class(s, line_pullback, c);

    ConstraintSystem sys;
    sys.angle_count = 1;
    StrictInequality exc;
    exc.form = intersect_with_class(s, L, c.components[0]);
    exc.provenance = {Provenance::Kind::BoundaryComponent, 0, "E"};
    sys.linear.push_back(std::move(exc));
    StrictInequality line;
    line.form = intersect_with_class(s, L, sub(line_pullback, basis_class(s, 1)));
    line.provenance = {Provenance::Kind::UserCurve, -1, "line_through_p"};
    sys.linear.push_back(std::move(line));
    sys.quadratic = square(s, L);
    return sys;
}

BoundaryChain hirzebruch_zf_chain(const SurfaceModel& s) {
    BoundaryChain c;
    c.components.push_back(basis_class(s, 0));
    c.components.push_back(basis_class(s, 1));
    c.component_ids = {"Z", "F"};
    return c;
}

ConstraintSystem tail_nakai_system(const TailSequenceSpec& spec) {
    TailLattice T = apply_tail_sequence(spec);
    ConstraintSystem sys;
    sys.angle_count = T.angles.count();
    sys.linear = boundary_constraints(T.S, T.C);
    for (auto& ineq : curve_constraints(T.S, T.C, catalog_curves(spec, T)))
        sys.linear.push_back(std::move(ineq));
    sys.quadratic = quadratic_constraint(T.S, T.C);
    return sys;
}

namespace {

struct Failure {
    std::string detail;
};

void expect(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

std::vector<std::vector<Rat>> sorted_points(std::vector<std::vector<Rat>> pts) {
    std::sort(pts.begin(), pts.end());
    return pts;
}

// --- criterion 1 -----------------------------------------------------------

void check_hirzebruch_interval() {
    for (int n = 1; n <= 10; ++n) {
        ConstraintSystem sys = hirzebruch_section_system(n);
        BodyOptions opt;
        opt.box = 4; // the interval endpoint 2/n exceeds 1 for n = 1
        AmpleAngleBody body = ample_angle_body(sys, opt);
        expect(!body.empty, "empty body for n=" + std::to_string(n));
        std::vector<std::vector<Rat>> want = {{Rat(0)}, {Rat(2, n)}};
        expect(sorted_points(body.vertices) == want,
               "interval endpoints differ from {0, 2/n} at n=" + std::to_string(n));
    }
}

// --- criterion 2 -----------------------------------------------------------

void check_plane_blowup_interval() {
    ConstraintSystem sys = plane_blowup_system();
    BodyOptions opt;
    opt.box = 4;
    AmpleAngleBody body = ample_angle_body(sys, opt);
    expect(!body.empty, "empty body");
    std::vector<std::vector<Rat>> want = {{Rat(0)}, {Rat(1)}};
    expect(sorted_points(body.vertices) == want, "interval endpoints differ from {0, 1}");
}

// --- criterion 3 -----------------------------------------------------------

void check_budget_law() {
    for (int n = 0; n <= 3; ++n) {
        SurfaceModel s = make_hirzebruch(n);
        BoundaryChain c = hirzebruch_zf_chain(s);
        expect(budget(s, c) == n + 2, "base budget is not n+2 at n=" + std::to_string(n));
        for (int h = 0; h <= 8; ++h)
            for (int v = 0; v + h <= 8; ++v) {
                TailLattice T = tail_blowups(s, c, h, v);
                expect(budget(T.S, T.C) == Rat(n + 2 - h - v),
                       "budget drop mismatch at n=" + std::to_string(n) + " h=" +
                           std::to_string(h) + " v=" + std::to_string(v));
            }
    }
}

// --- criterion 4 -----------------------------------------------------------

void check_adjunction() {
    for (int n = 0; n <= 3; ++n) {
        SurfaceModel s = make_hirzebruch(n);
        BoundaryChain c = hirzebruch_zf_chain(s);
        for (int h = 0; h <= 6; ++h)
            for (int v = 0; v + h <= 6; ++v) {
                TailLattice T = tail_blowups(s, c, h, v);
                DivisorClass total = canonical_class(T.S);
                for (const auto& comp : T.C.components) total = add(total, comp);
                const int r = c.size();
                int left_end = v > 0 ? r + h + v - 1 : 0;     // V_v, else c_1
                int right_end = h > 0 ? r + h - 1 : r - 1;    // H_h, else c_r
                for (int i = 0; i < T.C.size(); ++i) {
                    Rat a = intersect(T.S, T.C.components[i], total);
                    Rat want = (i == left_end || i == right_end) ? Rat(-1) : Rat(0);
                    expect(a == want, "adjunction value of " + T.C.component_ids[i] + " is " +
                                          to_string(a) + " at n=" + std::to_string(n) + " h=" +
                                          std::to_string(h) + " v=" + std::to_string(v));
                }
            }
    }
}

// --- criterion 5 -----------------------------------------------------------

void check_pullback_identity() {
    for (int n = 0; n <= 3; ++n) {
        SurfaceModel s = make_hirzebruch(n);
        BoundaryChain c = hirzebruch_zf_chain(s);
        for (int h = 0; h <= 4; ++h)
            for (int v = 0; v <= 4; ++v)
                expect(verify_pullback_formula(s, c, h, v),
                       "pullback identity fails at n=" + std::to_string(n) + " h=" +
                           std::to_string(h) + " v=" + std::to_string(v));
    }
}

// --- criterion 6 -----------------------------------------------------------

std::vector<TailSequenceSpec> cross_check_bases() {
    std::vector<TailSequenceSpec> out;
    for (int n = 0; n <= 3; ++n) { // r = 2
        SurfaceModel s = make_hirzebruch(n);
        out.push_back({s, hirzebruch_zf_chain(s), 0, 0});
    }
    for (int n = 1; n <= 2; ++n) { // r = 3: blow up the chain node
        SurfaceModel s = make_hirzebruch(n);
        auto [s3, c3] = node_blowup(s, hirzebruch_zf_chain(s), 0);
        out.push_back({s3, c3, 0, 0});
    }
    { // r = 4
        SurfaceModel s = make_hirzebruch(1);
        auto [s3, c3] = node_blowup(s, hirzebruch_zf_chain(s), 0);
        auto [s4, c4] = node_blowup(s3, c3, 1);
        out.push_back({s4, c4, 0, 0});
    }
    return out;
}

void check_matrix_cross_derivation() {
    for (TailSequenceSpec base : cross_check_bases())
        for (int h = 0; h <= 5; ++h)
            for (int v = 0; v + h <= 5; ++v) {
                if (h + v == 0) continue;
                base.h = h;
                base.v = v;
                CrossCheckResult res = cross_check_paper_matrix(base);
                expect(res.ok, "r=" + std::to_string(base.base_chain.size()) + " h=" +
                                   std::to_string(h) + " v=" + std::to_string(v) + ": " +
                                   res.detail);
            }

    // eliminating the first right angle from the h=2 block leaves
    // delta_2 > (1 - 2 c_r^2) beta_r
    for (long crsq = -3; crsq <= 1; ++crsq) {
        PaperLPMatrix M = build_paper_lp_matrix(2, 2, 0, -1, crsq);
        std::vector<StrictInequality> rows;
        for (int j = 0; j < M.constraint_columns(); ++j) {
            StrictInequality ineq;
            for (int k = 0; k < M.rows(); ++k) ineq.form.set_coeff(k, M.columns[j][k]);
            rows.push_back(std::move(ineq));
        }
        auto reduced = fourier_motzkin_eliminate(rows, 2); // delta_1
        expect(reduced.size() == 1, "expected a single surviving row, got " +
                                        std::to_string(reduced.size()) + " at c_r^2=" +
                                        std::to_string(crsq));
        const LinearForm& f = reduced[0].form;
        Rat lead = f.coeff(3); // delta_2
        expect(f.constant == 0 && lead > 0 && f.coeff(0) == 0 && f.coeff(2) == 0 &&
                   f.coeff(1) == lead * Rat(2 * crsq - 1),
               "eliminated row is not delta_2 > (1-2c_r^2) beta_r at c_r^2=" +
                   std::to_string(crsq));
    }
}

// --- criterion 7 -----------------------------------------------------------

void check_tail_feasibility_sweep() {
    for (int r = 1; r <= 4; ++r)
        for (int h = 0; h <= 6; ++h)
            for (int v = 0; v + h <= 6; ++v)
                for (long c1 = -3; c1 <= 1; ++c1)
                    for (long cr = -3; cr <= 1; ++cr) {
                        Thm1Result res = verify_thm_tail1(r, h, v, c1, cr);
                        std::string where = "r=" + std::to_string(r) + " h=" + std::to_string(h) +
                                            " v=" + std::to_string(v) + " c1^2=" +
                                            std::to_string(c1) + " cr^2=" + std::to_string(cr);
                        expect(res.feasible, "infeasible cell " + where);
                        expect(verify_certificate(res.system, res.certificate),
                               "certificate fails re-verification at " + where);
                    }
}

// --- criterion 8 -----------------------------------------------------------

void check_critical_quadratic() {
    for (int n = 0; n <= 3; ++n) {
        SurfaceModel s = make_hirzebruch(n);
        BoundaryChain c = hirzebruch_zf_chain(s);
        for (int h = 0; h <= n + 2; ++h) {
            int v = n + 2 - h; // x = budget
            TailLattice T = tail_blowups(s, c, h, v);
            QuadraticForm q = quadratic_constraint(T.S, T.C);
            std::string where = "n=" + std::to_string(n) + " h=" + std::to_string(h);
            expect(q.constant == 0, "nonzero constant at " + where);
            std::set<int> positive;
            for (const auto& [idx, coef] : q.linear) {
                expect(coef >= 0, "negative linear coefficient at " + where);
                if (coef > 0) positive.insert(idx);
            }
            std::set<int> want = {T.angles.eta(h), T.angles.nu(v)};
            expect(positive == want,
                   "positive linear support is not {last right, last left} at " + where);
            expect(classify_quadratic(q) == QuadraticVerdict::Critical,
                   "quadratic not classified critical at " + where);
        }
    }
}

// --- criterion 9 -----------------------------------------------------------

void check_gordan_fm() {
    std::uint64_t state = 0x243F6A8885A308D3ull;
    auto next = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 1000; ++trial) {
        int k = 1 + static_cast<int>(next() % 6);
        int m = 1 + static_cast<int>(next() % 12);
        std::vector<std::vector<Rat>> cols;
        std::vector<StrictInequality> rows;
        for (int j = 0; j < m; ++j) {
            std::vector<Rat> col(k);
            StrictInequality ineq;
            for (int i = 0; i < k; ++i) {
                long e = static_cast<long>(next() % 11) - 5;
                col[i] = e;
                if (e != 0) ineq.form.set_coeff(i, Rat(e));
            }
            cols.push_back(std::move(col));
            rows.push_back(std::move(ineq));
        }
        HomogeneousSystem sys;
        sys.dim = k;
        sys.columns = cols;
        FeasibilityCertificate cert = gordan_feasible(sys);
        std::string where = "trial " + std::to_string(trial);
        expect(verify_certificate(sys, cert), "certificate fails re-verification at " + where);
        bool fm = fm_feasible(rows, k);
        expect(cert.feasible == fm, "solver disagreement at " + where + " (gordan=" +
                                        (cert.feasible ? "feasible" : "infeasible") + ")");
    }
}

// --- criterion 10 ----------------------------------------------------------

std::vector<ConstraintSystem> small_corpus() {
    std::vector<ConstraintSystem> out;
    for (int n = 1; n <= 3; ++n) out.push_back(hirzebruch_section_system(n));
    out.push_back(plane_blowup_system());
    for (int n = 0; n <= 2; ++n) { // dim 2
        SurfaceModel s = make_hirzebruch(n);
        out.push_back(build_tilde_lp(tail_blowups(s, hirzebruch_zf_chain(s), 0, 0)));
    }
    { // dim 3
        SurfaceModel s = make_hirzebruch(1);
        out.push_back(build_tilde_lp(tail_blowups(s, hirzebruch_zf_chain(s), 1, 0)));
    }
    { // infeasible: x1 - x2 > 0 and x2 - x1 > 0
        ConstraintSystem sys;
        sys.angle_count = 2;
        StrictInequality a, b;
        a.form = LinearForm::variable(0) - LinearForm::variable(1);
        b.form = LinearForm::variable(1) - LinearForm::variable(0);
        sys.linear = {a, b};
        out.push_back(std::move(sys));
    }
    return out;
}

void check_grid_oracle() {
    auto corpus = small_corpus();
    for (size_t idx = 0; idx < corpus.size(); ++idx) {
        const ConstraintSystem& sys = corpus[idx];
        std::string where = "corpus system " + std::to_string(idx);
        OriginCheck oc = origin_in_closure(sys);
        expect(!oc.undetermined, "undetermined verdict at " + where);
        auto grid = grid_feasible_point(sys, 100);
        if (oc.in_closure) {
            // scale the certificate direction into (0,1)^k until strict
            Rat top = 0;
            for (const auto& x : oc.certificate.point) top = std::max(top, x);
            expect(top > 0, "degenerate certificate at " + where);
            bool found = false;
            Rat t = Rat(1, 2) / top;
            for (int j = 0; j < 60 && !found; ++j, t /= 2) {
                std::vector<Rat> p;
                for (const auto& x : oc.certificate.point) p.push_back(t * x);
                found = satisfies_strict(sys, p);
            }
            expect(found, "no feasible scaling of the certificate point at " + where);
        } else {
            expect(!grid.has_value(), "grid point found but origin not in closure at " + where);
        }
        if (grid) expect(satisfies_strict(sys, *grid), "grid point not strictly feasible at " + where);
    }
}

// --- criterion 11 ----------------------------------------------------------

void check_convexity() {
    auto run = [](const ConstraintSystem& sys, const Rat& box, const std::string& where) {
        BodyOptions opt;
        opt.box = box;
        ConvexityResult res = convexity_check(sys, 500, opt);
        expect(res.ok, "midpoint left the body at " + where);
    };
    for (int n = 1; n <= 10; ++n)
        run(hirzebruch_section_system(n), Rat(4), "hirzebruch n=" + std::to_string(n));
    run(plane_blowup_system(), Rat(4), "plane blow-up");

    const std::vector<std::pair<int, int>> shapes = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}};
    for (int n = 0; n <= 3; ++n) {
        SurfaceModel s = make_hirzebruch(n);
        for (auto [h, v] : shapes) {
            TailSequenceSpec spec{s, hirzebruch_zf_chain(s), h, v};
            run(tail_nakai_system(spec), Rat(1), "sweep n=" + std::to_string(n) + " h=" +
                                                     std::to_string(h) + " v=" + std::to_string(v));
        }
    }
}

struct NamedCheck {
    const char* name;
    void (*fn)();
};

const NamedCheck kChecks[] = {
    {"hirzebruch-interval", check_hirzebruch_interval},
    {"plane-blowup-interval", check_plane_blowup_interval},
    {"budget-law", check_budget_law},
    {"adjunction", check_adjunction},
    {"pullback-identity", check_pullback_identity},
    {"matrix-cross-derivation", check_matrix_cross_derivation},
    {"tail-feasibility-sweep", check_tail_feasibility_sweep},
    {"critical-quadratic", check_critical_quadratic},
    {"gordan-fm", check_gordan_fm},
    {"grid-oracle", check_grid_oracle},
    {"convexity", check_convexity},
};

} // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& c : kChecks) out.emplace_back(c.name);
    return out;
}

CheckResult run_check(const std::string& name) {
    for (const auto& c : kChecks)
        if (name == c.name) {
            CheckResult res;
            res.name = name;
            try {
                c.fn();
                res.passed = true;
            } catch (const Failure& f) {
                res.passed = false;
                res.detail = f.detail;
            }
            return res;
        }
    throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckResult> run_all_checks() {
    std::vector<CheckResult> out;
    for (const auto& c : kChecks) out.push_back(run_check(c.name));
    return out;
}

} // namespace aa
