#include <aa/selfcheck.hpp>
#include <aa/tailblowup.hpp>

#include <doctest.h>

using namespace aa;

namespace {

TailSequenceSpec zf_spec(int n, int h, int v) {
    SurfaceModel s = make_hirzebruch(n);
    return {s, hirzebruch_zf_chain(s), h, v};
}

} // namespace

TEST_CASE("budget") {
    for (int n = 0; n <= 3; ++n) {
        TailSequenceSpec spec = zf_spec(n, 0, 0);
        CHECK(budget(spec.base_surface, spec.base_chain) == n + 2);
    }
    // a section-only boundary
    SurfaceModel f1 = make_hirzebruch(1);
    BoundaryChain z_only;
    z_only.components = {basis_class(f1, 0)};
    CHECK(budget(f1, z_only) == 5);
    // two disjoint sections exhaust the budget entirely
    BoundaryChain sections;
    sections.components = {basis_class(f1, 0),
                           add(basis_class(f1, 0), basis_class(f1, 1))};
    CHECK(budget(f1, sections) == 0);
}

TEST_CASE("cycles admit no tails") {
    SurfaceModel p2 = make_projective_plane();
    TailSequenceSpec spec;
    spec.base_surface = p2;
    spec.base_chain.components = {basis_class(p2, 0), basis_class(p2, 0), basis_class(p2, 0)};
    spec.h = 1;
    CHECK_THROWS_WITH_AS(apply_tail_sequence(spec), "cycle boundary has no tails",
                         std::invalid_argument);
}

TEST_CASE("block matrix shape") {
    // r + 2h + 2v columns in total, r + h + v of them the identity
    CHECK(build_paper_lp_matrix(2, 2, 2, 0, 0).columns.size() == 10);
    CHECK(build_paper_lp_matrix(2, 2, 2, 0, 0).rows() == 6);
    CHECK(build_paper_lp_matrix(2, 1, 0, 0, -1).constraint_columns() == 1);
    CHECK(build_paper_lp_matrix(3, 2, 1, -1, 0).constraint_columns() == 3);
    CHECK_THROWS_AS(build_paper_lp_matrix(2, 0, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("block matrix entries") {
    // single right blow-up: delta_1 + (c_r^2 - 1) beta_r
    PaperLPMatrix M = build_paper_lp_matrix(2, 1, 0, -1, 0);
    CHECK(M.columns[0] == std::vector<Rat>{Rat(0), Rat(-1), Rat(1)});

    // h = 2: second column is beta_r - 2 delta_1 + delta_2
    M = build_paper_lp_matrix(2, 2, 0, -1, 0);
    CHECK(M.columns[0] == std::vector<Rat>{Rat(0), Rat(-1), Rat(1), Rat(0)});
    CHECK(M.columns[1] == std::vector<Rat>{Rat(0), Rat(1), Rat(-2), Rat(1)});

    // single left blow-up: gamma_1 + (c_1^2 - 1) beta_1
    M = build_paper_lp_matrix(2, 0, 1, -2, 0);
    CHECK(M.columns[0] == std::vector<Rat>{Rat(-3), Rat(0), Rat(1)});
}

TEST_CASE("boundary-only system") {
    TailLattice T = apply_tail_sequence(zf_spec(1, 2, 0));
    ConstraintSystem sys = build_tilde_lp(T);
    CHECK(sys.angle_count == 4);
    CHECK(sys.linear.size() == 4);
    CHECK_FALSE(sys.quadratic.has_value());
    NearOriginReduction red = near_origin_reduce(sys);
    // the two chain ends are vacuous near the origin
    CHECK(red.rows.size() == 2);
}

TEST_CASE("feasibility of the block system") {
    Thm1Result res = verify_thm_tail1(2, 1, 1, -1, 0);
    CHECK(res.feasible);
    CHECK(verify_certificate(res.system, res.certificate));

    Thm1Result trivial = verify_thm_tail1(3, 0, 0, -1, -1);
    CHECK(trivial.feasible);
    CHECK(verify_certificate(trivial.system, trivial.certificate));
}

TEST_CASE("cross-derivation") {
    for (auto [h, v] : {std::pair{1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}, {2, 1}, {1, 2}}) {
        CrossCheckResult res = cross_check_paper_matrix(zf_spec(1, h, v));
        INFO("h=", h, " v=", v, " ", res.detail);
        CHECK(res.ok);
    }
    TailSequenceSpec r1;
    r1.base_surface = make_hirzebruch(1);
    r1.base_chain.components = {basis_class(r1.base_surface, 0)};
    r1.h = 1;
    CHECK_THROWS_AS(cross_check_paper_matrix(r1), std::invalid_argument);
}

TEST_CASE("classification") {
    TailEvidence ev = classify_tail(zf_spec(1, 1, 0), {});
    CHECK(ev.verdict == TailVerdict::ALF_ModuloCurves);
    CHECK(ev.budget_value == 3);
    CHECK(ev.x == 1);
    CHECK(verify_certificate(ev.origin.system, ev.origin.certificate));

    CHECK(classify_tail(zf_spec(1, 3, 1), {}).verdict == TailVerdict::NotALF_Budget);
    CHECK(classify_tail(zf_spec(1, 1, 0), {}, true).verdict == TailVerdict::ALF_Verified);
}

TEST_CASE("classification matches a brute-force scan") {
    // (F_1, Z+F) with one right blow-up: some point of the small box
    // (0, 1/10)^3 must satisfy every constraint of the full system
    TailSequenceSpec spec = zf_spec(1, 1, 0);
    ConstraintSystem sys = tail_nakai_system(spec);
    bool found = false;
    for (int a = 1; a < 20 && !found; ++a)
        for (int b = 1; b < 20 && !found; ++b)
            for (int c = 1; c < 20 && !found; ++c)
                found = satisfies_strict(sys, {Rat(a, 200), Rat(b, 200), Rat(c, 200)});
    CHECK(found);
    CHECK(classify_tail(spec, {}).verdict == TailVerdict::ALF_ModuloCurves);
}

TEST_CASE("budget verdict is monotone in the blow-up counts") {
    for (int n = 0; n <= 2; ++n)
        for (int h = 0; h <= 4; ++h)
            for (int v = 0; v + h <= 4; ++v) {
                if (classify_tail(zf_spec(n, h, v), {}).verdict != TailVerdict::NotALF_Budget)
                    continue;
                CHECK(classify_tail(zf_spec(n, h + 1, v), {}).verdict ==
                      TailVerdict::NotALF_Budget);
                CHECK(classify_tail(zf_spec(n, h, v + 1), {}).verdict ==
                      TailVerdict::NotALF_Budget);
            }
}

TEST_CASE("prefixes of a feasible sequence stay feasible") {
    for (int n = 0; n <= 2; ++n)
        for (int h = 0; h <= n + 2; ++h) {
            int v = n + 2 - h; // full budget, still feasible
            REQUIRE(classify_tail(zf_spec(n, h, v), {}).verdict ==
                    TailVerdict::ALF_ModuloCurves);
            for (int hp = 0; hp <= h; ++hp)
                for (int vp = 0; vp <= v; ++vp)
                    CHECK(classify_tail(zf_spec(n, hp, vp), {}).verdict ==
                          TailVerdict::ALF_ModuloCurves);
        }
}

TEST_CASE("catalog curves") {
    TailSequenceSpec spec = zf_spec(1, 1, 1);
    TailLattice T = apply_tail_sequence(spec);
    auto curves = catalog_curves(spec, T);
    // the right tail sits on the fiber itself, so only the left center
    // carries a fiber through it; Z and F are boundary components already
    REQUIRE(curves.size() == 1);
    CHECK(curves[0].label == "fiber_left");
    CHECK(intersect(T.S, curves[0].cls, basis_class(T.S, T.v_slots[0])) == 1);
    CHECK(intersect(T.S, curves[0].cls, curves[0].cls) == -1);
}

TEST_CASE("verdict names") {
    CHECK(to_string(TailVerdict::NotALF_Budget) == "NotALF_Budget");
    CHECK(to_string(TailVerdict::ALF_Verified) == "ALF_Verified");
}
