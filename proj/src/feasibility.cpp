#include <aa/feasibility.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace aa {

HomogeneousSystem HomogeneousSystem::from_rows(int dim, const std::vector<std::vector<Rat>>& rows,
                                               bool include_orthant) {
    HomogeneousSystem sys;
    sys.dim = dim;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != dim)
            throw std::invalid_argument("row dimension mismatch");
        sys.columns.push_back(r);
    }
    if (include_orthant)
        for (int i = 0; i < dim; ++i) {
            std::vector<Rat> e(dim, Rat(0));
            e[i] = 1;
            sys.columns.push_back(std::move(e));
        }
    return sys;
}

namespace {

// Phase-1 simplex (dense tableau, Bland's rule) for
//   min 1.z   s.t.  [A; 1^T] y + z = e_{k+1},  y, z >= 0.
// Zero optimum yields the Gordan dual y (sum y = 1); a positive optimum
// yields simplex multipliers u with u.[A_j;1] <= 0 and u_{k+1} > 0, so
// x = -(u_1..u_k) strictly separates.
struct Phase1Result {
    Rat objective;
    std::vector<Rat> y;          // length m
    std::vector<Rat> multipliers; // length k+1
};

Phase1Result phase1(const std::vector<std::vector<Rat>>& cols, int k) {
    const int m = static_cast<int>(cols.size());
    const int rows = k + 1;
    const int ncols = m + rows; // y columns then artificials
    // tableau[i] = row of [M | I], rhs kept separately
    std::vector<std::vector<Rat>> T(rows, std::vector<Rat>(ncols, Rat(0)));
    std::vector<Rat> rhs(rows, Rat(0));
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < k; ++i) T[i][j] = cols[j][i];
        T[k][j] = 1; // normalization row: sum y = 1
    }
    for (int i = 0; i < rows; ++i) T[i][m + i] = 1;
    rhs[k] = 1;

    std::vector<int> basis(rows);
    for (int i = 0; i < rows; ++i) basis[i] = m + i;

    auto cost = [m](int j) { return j >= m ? Rat(1) : Rat(0); };

    while (true) {
        // reduced costs, Bland: lowest index wins
        int enter = -1;
        for (int j = 0; j < ncols && enter < 0; ++j) {
            Rat z = 0;
            for (int i = 0; i < rows; ++i)
                if (cost(basis[i]) != 0) z += T[i][j];
            if (cost(j) - z < 0) enter = j;
        }
        if (enter < 0) break;
        int leave = -1;
        Rat best;
        for (int i = 0; i < rows; ++i) {
            if (T[i][enter] <= 0) continue;
            Rat ratio = rhs[i] / T[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("phase-1 unbounded"); // cannot happen: objective >= 0
        Rat piv = T[leave][enter];
        for (auto& t : T[leave]) t /= piv;
        rhs[leave] /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rat f = T[i][enter];
            for (int j = 0; j < ncols; ++j) T[i][j] -= f * T[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        basis[leave] = enter;
    }

    Phase1Result out;
    out.objective = 0;
    out.y.assign(m, Rat(0));
    for (int i = 0; i < rows; ++i) {
        if (basis[i] < m)
            out.y[basis[i]] = rhs[i];
        else
            out.objective += rhs[i];
    }
    out.multipliers.assign(rows, Rat(0));
    for (int i = 0; i < rows; ++i) {
        // u_j = c_artificial - reduced cost of artificial column j
        Rat z = 0;
        for (int r = 0; r < rows; ++r)
            if (cost(basis[r]) != 0) z += T[r][m + i];
        out.multipliers[i] = z; // = 1 - (1 - z)
    }
    return out;
}

} // namespace

FeasibilityCertificate gordan_feasible(const HomogeneousSystem& sys) {
    FeasibilityCertificate cert;
    if (sys.columns.empty()) {
        cert.feasible = true;
        cert.point.assign(sys.dim, Rat(1));
        return cert;
    }
    Phase1Result res = phase1(sys.columns, sys.dim);
    if (res.objective == 0) {
        cert.feasible = false;
        cert.dual = std::move(res.y);
    } else {
        cert.feasible = true;
        cert.point.resize(sys.dim);
        for (int i = 0; i < sys.dim; ++i) cert.point[i] = -res.multipliers[i];
    }
    if (!verify_certificate(sys, cert))
        throw std::logic_error("gordan certificate failed self-verification");
    return cert;
}

bool verify_certificate(const HomogeneousSystem& sys, const FeasibilityCertificate& cert) {
    if (cert.feasible) {
        if (static_cast<int>(cert.point.size()) != sys.dim) return false;
        for (const auto& col : sys.columns) {
            Rat dot = 0;
            for (int i = 0; i < sys.dim; ++i) dot += cert.point[i] * col[i];
            if (dot <= 0) return false;
        }
        return true;
    }
    if (cert.dual.size() != sys.columns.size()) return false;
    bool nonzero = false;
    for (const auto& y : cert.dual) {
        if (y < 0) return false;
        if (y != 0) nonzero = true;
    }
    if (!nonzero) return false;
    for (int i = 0; i < sys.dim; ++i) {
        Rat s = 0;
        for (size_t j = 0; j < sys.columns.size(); ++j) s += cert.dual[j] * sys.columns[j][i];
        if (s != 0) return false;
    }
    return true;
}

namespace {

// positive-scale normalization so duplicates and positive multiples merge
LinearForm normalized(const LinearForm& f) {
    Rat scale = 0;
    if (!f.coeffs.empty())
        scale = abs(f.coeffs.begin()->second);
    else if (f.constant != 0)
        scale = abs(f.constant);
    if (scale == 0 || scale == 1) return f;
    LinearForm out = f;
    out *= Rat(1) / scale;
    return out;
}

std::vector<StrictInequality> reduce_rows(std::vector<StrictInequality> rows) {
    std::vector<StrictInequality> out;
    for (auto& r : rows) {
        r.form = normalized(r.form);
        if (r.form.coeffs.empty() && r.form.constant > 0) continue; // tautology
        bool drop = false;
        for (auto& kept : out) {
            if (kept.form.coeffs != r.form.coeffs) continue;
            // same gradient: the smaller constant implies the larger
            if (kept.form.constant <= r.form.constant) {
                drop = true;
                break;
            }
            kept.form.constant = r.form.constant;
            drop = true;
            break;
        }
        if (!drop) out.push_back(std::move(r));
    }
    return out;
}

} // namespace

std::vector<StrictInequality> fourier_motzkin_eliminate(const std::vector<StrictInequality>& rows,
                                                        int var) {
    std::vector<const StrictInequality*> lower, upper;
    std::vector<StrictInequality> out;
    for (const auto& r : rows) {
        Rat c = r.form.coeff(var);
        if (c > 0)
            lower.push_back(&r);
        else if (c < 0)
            upper.push_back(&r);
        else
            out.push_back(r);
    }
    for (const auto* lo : lower)
        for (const auto* up : upper) {
            Rat a = lo->form.coeff(var);   // > 0
            Rat b = -up->form.coeff(var);  // > 0
            StrictInequality comb;
            LinearForm f = lo->form;
            f *= b;
            LinearForm g = up->form;
            g *= a;
            comb.form = f + g;
            comb.provenance = {Provenance::Kind::UserCurve, -1, "fm"};
            out.push_back(std::move(comb));
        }
    return reduce_rows(std::move(out));
}

bool fm_feasible(std::vector<StrictInequality> input, int nvars) {
    // Rows carry the set of original rows they combine (as a bitmask);
    // a derived row mixing more than eliminated+1 originals is a
    // redundant consequence and can be dropped (Imbert's acceleration),
    // which keeps the elimination from exploding.
    struct Row {
        LinearForm form;
        std::uint64_t mask;
    };
    input = reduce_rows(std::move(input));
    const bool track = input.size() <= 64;
    std::vector<Row> rows;
    for (size_t i = 0; i < input.size(); ++i)
        rows.push_back({std::move(input[i].form), track ? std::uint64_t(1) << i : 0});

    auto merge = [](std::vector<Row> in) {
        std::vector<Row> out;
        for (auto& r : in) {
            r.form = normalized(r.form);
            if (r.form.coeffs.empty() && r.form.constant > 0) continue;
            bool drop = false;
            for (auto& kept : out) {
                if (kept.form.coeffs != r.form.coeffs) continue;
                if (kept.form.constant > r.form.constant) {
                    kept.form.constant = r.form.constant;
                    kept.mask = r.mask;
                }
                drop = true;
                break;
            }
            if (!drop) out.push_back(std::move(r));
        }
        return out;
    };

    std::vector<bool> done(nvars, false);
    for (int eliminated = 0; eliminated < nvars; ++eliminated) {
        for (const auto& r : rows)
            if (r.form.coeffs.empty() && r.form.constant <= 0) return false;
        // greedy: eliminate the variable with the fewest pairings
        int best = -1;
        long best_cost = 0;
        for (int v = 0; v < nvars; ++v) {
            if (done[v]) continue;
            long lo = 0, up = 0;
            for (const auto& r : rows) {
                Rat c = r.form.coeff(v);
                if (c > 0) ++lo;
                else if (c < 0) ++up;
            }
            long c = lo * up - (lo + up);
            if (best < 0 || c < best_cost) {
                best = v;
                best_cost = c;
            }
        }
        done[best] = true;

        std::vector<Row> lower, upper, next;
        for (auto& r : rows) {
            Rat c = r.form.coeff(best);
            if (c > 0)
                lower.push_back(std::move(r));
            else if (c < 0)
                upper.push_back(std::move(r));
            else
                next.push_back(std::move(r));
        }
        const int ancestors_allowed = eliminated + 2;
        for (const auto& lo : lower)
            for (const auto& up : upper) {
                std::uint64_t mask = lo.mask | up.mask;
                Rat a = lo.form.coeff(best);  // > 0
                Rat b = -up.form.coeff(best); // > 0
                LinearForm f = lo.form;
                f *= b;
                LinearForm g = up.form;
                g *= a;
                f += g;
                // constant rows are exempt: a derived "0 > 0" is the
                // infeasibility witness of a strict system, never redundant
                if (!f.coeffs.empty() && track && std::popcount(mask) > ancestors_allowed)
                    continue;
                next.push_back({std::move(f), mask});
            }
        rows = merge(std::move(next));
    }
    for (const auto& r : rows)
        if (r.form.constant <= 0) return false;
    return true;
}

namespace {

int lowest_order_sign(const QuadraticForm& q, const std::vector<Rat>& ray) {
    auto c = q.along_ray(ray);
    for (const auto& coef : c)
        if (coef != 0) return coef > 0 ? 1 : -1;
    return 0;
}

} // namespace

OriginCheck origin_in_closure(const ConstraintSystem& sys) {
    OriginCheck out;
    NearOriginReduction red = near_origin_reduce(sys);
    if (red.verdict == NearOriginReduction::Verdict::Infeasible) {
        out.in_closure = false;
        out.note = "an inequality with negative constant excludes a neighborhood of the origin";
        return out;
    }
    out.system = HomogeneousSystem::from_rows(sys.angle_count, red.rows, true);
    out.certificate = gordan_feasible(out.system);
    if (!out.certificate.feasible) {
        out.in_closure = false;
        out.note = "homogeneous system infeasible (dual certificate attached)";
        return out;
    }
    if (!sys.quadratic) {
        out.in_closure = true;
        return out;
    }
    out.quadratic_verdict = classify_quadratic(*sys.quadratic);
    switch (*out.quadratic_verdict) {
    case QuadraticVerdict::Subcritical:
        out.in_closure = true;
        out.note = "quadratic has positive constant term";
        return out;
    case QuadraticVerdict::Critical:
        out.in_closure = true;
        out.note = "critical quadratic: nonnegative linear part, positive somewhere";
        return out;
    case QuadraticVerdict::Supercritical:
        out.in_closure = false;
        out.note = "quadratic negative at the origin";
        return out;
    case QuadraticVerdict::General:
        break;
    }
    // ray analysis along the certificate ray, then perturbations
    std::vector<std::vector<Rat>> rays{out.certificate.point};
    for (int i = 0; i < sys.angle_count && static_cast<int>(rays.size()) < 9; ++i) {
        for (int dir : {1, -1}) {
            std::vector<Rat> p = out.certificate.point;
            p[i] += dir * p[i] / 2;
            FeasibilityCertificate c{true, p, {}};
            if (verify_certificate(out.system, c)) rays.push_back(std::move(p));
            if (static_cast<int>(rays.size()) >= 9) break;
        }
    }
    for (const auto& ray : rays) {
        int s = lowest_order_sign(*sys.quadratic, ray);
        if (s > 0) {
            out.in_closure = true;
            out.note = "quadratic positive to lowest order along a feasible ray";
            return out;
        }
        if (s < 0) {
            out.in_closure = false;
            out.note = "quadratic negative to lowest order along the tested feasible ray";
            return out;
        }
    }
    out.in_closure = false;
    out.undetermined = true;
    out.note = "quadratic vanishes identically along all tested rays";
    return out;
}

namespace {

// van der Corput radical inverse, exact rational in (0,1)
Rat radical_inverse(unsigned index, unsigned base) {
    Rat value = 0, inv = Rat(1, base);
    Rat f = inv;
    for (unsigned i = index; i > 0; i /= base) {
        value += Rat(i % base) * f;
        f *= inv;
    }
    return value;
}

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::vector<Rat> halton_point(unsigned index, int dim) {
    std::vector<Rat> p(dim);
    for (int i = 0; i < dim; ++i)
        p[i] = radical_inverse(index, kPrimes[i % (sizeof(kPrimes) / sizeof(*kPrimes))]);
    return p;
}

// solve M x = b exactly; empty on singular M
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> M, std::vector<Rat> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(M[col], M[piv]);
        std::swap(b[col], b[piv]);
        Rat d = M[col][col];
        for (int j = col; j < n; ++j) M[col][j] /= d;
        b[col] /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rat f = M[r][col];
            for (int j = col; j < n; ++j) M[r][j] -= f * M[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

} // namespace

bool satisfies_strict(const ConstraintSystem& sys, const std::vector<Rat>& point, const Rat& box) {
    for (const auto& x : point)
        if (x <= 0 || x >= box) return false;
    for (const auto& ineq : sys.linear)
        if (ineq.form.evaluate(point) <= 0) return false;
    if (sys.quadratic && sys.quadratic->evaluate(point) <= 0) return false;
    return true;
}

std::vector<std::vector<Rat>> feasible_sample_pool(const ConstraintSystem& sys, const Rat& box,
                                                   int target) {
    std::vector<std::vector<Rat>> pool;
    const int dim = sys.angle_count;
    for (int scale_pow = 0; scale_pow < 8 && static_cast<int>(pool.size()) < target; ++scale_pow) {
        Rat eps = box / Rat(Int(1) << scale_pow);
        for (unsigned idx = 1; idx <= 64 && static_cast<int>(pool.size()) < target; ++idx) {
            std::vector<Rat> p = halton_point(idx, dim);
            for (auto& x : p) x *= eps;
            if (satisfies_strict(sys, p, box)) pool.push_back(std::move(p));
        }
    }
    return pool;
}

AmpleAngleBody ample_angle_body(const ConstraintSystem& sys, const BodyOptions& options) {
    AmpleAngleBody body;
    body.dim = sys.angle_count;
    body.quadratic = sys.quadratic;
    body.hrep = sys.linear;
    for (auto& cube : cube_constraints(sys.angle_count, options.box))
        body.hrep.push_back(std::move(cube));

    if (body.dim <= options.fm_dim_limit) {
        body.empty = !fm_feasible(body.hrep, body.dim);
    }

    auto quad_sign = [&](const std::vector<Rat>& p) {
        if (!sys.quadratic) return 2;
        Rat v = sys.quadratic->evaluate(p);
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    };

    if (body.dim <= 4 && !body.empty) {
        // closure vertices: every maximal-rank intersection of bounding
        // hyperplanes that satisfies all closed constraints
        const int k = body.dim;
        const int m = static_cast<int>(body.hrep.size());
        std::vector<int> pick(k);
        auto rec = [&](auto&& self, int depth, int start) -> void {
            if (depth == k) {
                std::vector<std::vector<Rat>> M(k, std::vector<Rat>(k));
                std::vector<Rat> b(k);
                for (int i = 0; i < k; ++i) {
                    auto d = body.hrep[pick[i]].form.dense(k);
                    M[i] = d;
                    b[i] = -body.hrep[pick[i]].form.constant;
                }
                auto x = solve_square(std::move(M), std::move(b));
                if (!x) return;
                for (const auto& ineq : body.hrep)
                    if (ineq.form.evaluate(*x) < 0) return;
                if (std::find(body.vertices.begin(), body.vertices.end(), *x) ==
                    body.vertices.end()) {
                    body.vertex_quadratic_sign.push_back(quad_sign(*x));
                    body.vertices.push_back(std::move(*x));
                }
                return;
            }
            for (int j = start; j < m; ++j) {
                pick[depth] = j;
                self(self, depth + 1, j + 1);
            }
        };
        rec(rec, 0, 0);
    } else if (!body.empty) {
        ConstraintSystem strict = sys;
        body.samples = feasible_sample_pool(strict, options.box, options.sample_target);
        for (const auto& p : body.samples) body.sample_quadratic_sign.push_back(quad_sign(p));
        if (body.dim > options.fm_dim_limit) body.empty = body.samples.empty();
    }
    return body;
}

ConvexityResult convexity_check(const ConstraintSystem& sys, int trials,
                                const BodyOptions& options) {
    ConvexityResult out;
    auto pool = feasible_sample_pool(sys, options.box, 64);
    if (pool.size() < 2) return out; // nothing to pair up
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int t = 0; t < trials; ++t) {
        size_t i = next() % pool.size();
        size_t j = next() % pool.size();
        if (i == j) j = (j + 1) % pool.size();
        std::vector<Rat> mid(sys.angle_count);
        for (int k = 0; k < sys.angle_count; ++k) mid[k] = (pool[i][k] + pool[j][k]) / 2;
        ++out.trials_run;
        if (!satisfies_strict(sys, mid, options.box)) {
            out.ok = false;
            out.witness_a = pool[i];
            out.witness_b = pool[j];
            return out;
        }
    }
    return out;
}

std::optional<std::vector<Rat>> grid_feasible_point(const ConstraintSystem& sys, int steps) {
    const int k = sys.angle_count;
    if (k < 1 || k > 3) throw std::invalid_argument("grid oracle supports dimensions 1..3");
    // clear denominators once; evaluate with 64-bit integers on the grid
    struct IntForm {
        std::int64_t constant;
        std::vector<std::int64_t> coeffs;
    };
    auto to_i64 = [](const Rat& r) {
        Int n = numerator(r);
        if (n > std::numeric_limits<std::int64_t>::max() ||
            n < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("grid oracle coefficient too large");
        return static_cast<std::int64_t>(n);
    };
    std::vector<IntForm> forms;
    for (const auto& ineq : sys.linear) {
        Int lcm = 1;
        lcm = boost::multiprecision::lcm(lcm, denominator(ineq.form.constant));
        auto dense = ineq.form.dense(k);
        for (const auto& c : dense) lcm = boost::multiprecision::lcm(lcm, denominator(c));
        IntForm f;
        f.constant = to_i64(Rat(ineq.form.constant * lcm * steps));
        for (const auto& c : dense) f.coeffs.push_back(to_i64(Rat(c * lcm)));
        forms.push_back(std::move(f));
    }
    std::vector<int> idx(k, 1);
    while (true) {
        bool ok = true;
        for (const auto& f : forms) {
            std::int64_t val = f.constant;
            for (int d = 0; d < k; ++d) val += f.coeffs[d] * idx[d];
            if (val <= 0) {
                ok = false;
                break;
            }
        }
        if (ok && sys.quadratic) {
            std::vector<Rat> p(k);
            for (int d = 0; d < k; ++d) p[d] = Rat(idx[d], steps);
            if (sys.quadratic->evaluate(p) <= 0) ok = false;
        }
        if (ok) {
            std::vector<Rat> p(k);
            for (int d = 0; d < k; ++d) p[d] = Rat(idx[d], steps);
            return p;
        }
        int d = 0;
        while (d < k && ++idx[d] >= steps) {
            idx[d] = 1;
            ++d;
        }
        if (d == k) break;
    }
    return std::nullopt;
}

} // namespace aa
