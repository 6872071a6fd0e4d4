#include <aa/feasibility.hpp>

#include <doctest.h>

#include <algorithm>

using namespace aa;

namespace {

StrictInequality row(Rat constant, std::vector<Rat> coeffs) {
    StrictInequality out;
    out.form.constant = std::move(constant);
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) out.form.set_coeff(static_cast<int>(i), coeffs[i]);
    return out;
}

} // namespace

TEST_CASE("gordan alternative") {
    HomogeneousSystem feasible;
    feasible.dim = 2;
    feasible.columns = {{Rat(1), Rat(0)}, {Rat(-1), Rat(2)}};
    FeasibilityCertificate cert = gordan_feasible(feasible);
    CHECK(cert.feasible);
    CHECK(verify_certificate(feasible, cert));

    HomogeneousSystem infeasible;
    infeasible.dim = 1;
    infeasible.columns = {{Rat(1)}, {Rat(-1)}};
    FeasibilityCertificate dual = gordan_feasible(infeasible);
    CHECK_FALSE(dual.feasible);
    CHECK(verify_certificate(infeasible, dual));

    // a tampered certificate must not verify
    FeasibilityCertificate bogus = cert;
    bogus.point[0] = -bogus.point[0] - 1;
    CHECK_FALSE(verify_certificate(feasible, bogus));
}

TEST_CASE("orthant folding") {
    // x1 - x2 > 0 alone is feasible even inside the positive orthant
    HomogeneousSystem sys = HomogeneousSystem::from_rows(2, {{Rat(1), Rat(-1)}}, true);
    CHECK(sys.columns.size() == 3);
    FeasibilityCertificate cert = gordan_feasible(sys);
    CHECK(cert.feasible);
    CHECK(cert.point[0] > cert.point[1]);
    CHECK(cert.point[1] > 0);
}

TEST_CASE("fourier-motzkin elimination") {
    // 0 < x < 1 and x > y  ->  y < 1 after eliminating x
    std::vector<StrictInequality> rows = {row(Rat(0), {Rat(1), Rat(0)}),
                                          row(Rat(1), {Rat(-1), Rat(0)}),
                                          row(Rat(0), {Rat(1), Rat(-1)})};
    auto projected = fourier_motzkin_eliminate(rows, 0);
    bool has_y_lt_1 = std::any_of(projected.begin(), projected.end(), [](const auto& r) {
        return r.form.constant == 1 && r.form.coeff(1) == -1;
    });
    CHECK(has_y_lt_1);
    for (const auto& r : projected) CHECK(r.form.coeff(0) == 0);
}

TEST_CASE("full elimination decides feasibility") {
    CHECK(fm_feasible({row(Rat(0), {Rat(1)})}, 1));                              // x > 0
    CHECK_FALSE(fm_feasible({row(Rat(1), {Rat(-1)}), row(Rat(-2), {Rat(1)})}, 1)); // x<1, x>2
    CHECK_FALSE(fm_feasible({row(Rat(0), {Rat(1), Rat(-1)}), row(Rat(0), {Rat(-1), Rat(1)})}, 2));
    CHECK(fm_feasible({row(Rat(0), {Rat(1), Rat(-1)}), row(Rat(0), {Rat(0), Rat(1)})}, 2));
}

TEST_CASE("origin in closure") {
    ConstraintSystem sys;
    sys.angle_count = 2;
    sys.linear = {row(Rat(0), {Rat(1), Rat(-1)})}; // x1 > x2, fine near 0
    OriginCheck oc = origin_in_closure(sys);
    CHECK(oc.in_closure);
    CHECK(verify_certificate(oc.system, oc.certificate));

    sys.linear.push_back(row(Rat(-1), {Rat(1), Rat(0)})); // x1 > 1 blocks the origin
    CHECK_FALSE(origin_in_closure(sys).in_closure);

    ConstraintSystem opposed;
    opposed.angle_count = 2;
    opposed.linear = {row(Rat(0), {Rat(1), Rat(-1)}), row(Rat(0), {Rat(-1), Rat(1)})};
    OriginCheck bad = origin_in_closure(opposed);
    CHECK_FALSE(bad.in_closure);
    CHECK(verify_certificate(bad.system, bad.certificate)); // dual certificate
}

TEST_CASE("supercritical quadratic excludes the origin") {
    ConstraintSystem sys;
    sys.angle_count = 1;
    sys.linear = {row(Rat(0), {Rat(1)})};
    QuadraticForm q;
    q.constant = -1;
    sys.quadratic = q;
    OriginCheck oc = origin_in_closure(sys);
    CHECK_FALSE(oc.in_closure);
    CHECK(oc.quadratic_verdict == QuadraticVerdict::Supercritical);
}

TEST_CASE("interval body") {
    ConstraintSystem sys;
    sys.angle_count = 1;
    sys.linear = {row(Rat(2), {Rat(-3)}), row(Rat(1), {Rat(1)})}; // x < 2/3, x > -1
    AmpleAngleBody body = ample_angle_body(sys);
    CHECK_FALSE(body.empty);
    auto verts = body.vertices;
    std::sort(verts.begin(), verts.end());
    CHECK(verts == std::vector<std::vector<Rat>>{{Rat(0)}, {Rat(2, 3)}});
}

TEST_CASE("empty body") {
    ConstraintSystem sys;
    sys.angle_count = 1;
    sys.linear = {row(Rat(-2), {Rat(1)})}; // x > 2 misses the unit box
    AmpleAngleBody body = ample_angle_body(sys);
    CHECK(body.empty);
    CHECK(body.vertices.empty());
}

TEST_CASE("square body in two angles") {
    ConstraintSystem sys;
    sys.angle_count = 2;
    AmpleAngleBody body = ample_angle_body(sys); // box only
    auto verts = body.vertices;
    std::sort(verts.begin(), verts.end());
    CHECK(verts == std::vector<std::vector<Rat>>{{Rat(0), Rat(0)},
                                                 {Rat(0), Rat(1)},
                                                 {Rat(1), Rat(0)},
                                                 {Rat(1), Rat(1)}});
}

TEST_CASE("strict membership") {
    ConstraintSystem sys;
    sys.angle_count = 2;
    sys.linear = {row(Rat(0), {Rat(1), Rat(-1)})};
    CHECK(satisfies_strict(sys, {Rat(1, 2), Rat(1, 4)}));
    CHECK_FALSE(satisfies_strict(sys, {Rat(1, 4), Rat(1, 2)}));
    CHECK_FALSE(satisfies_strict(sys, {Rat(1, 2), Rat(0)}));  // box is strict
    CHECK_FALSE(satisfies_strict(sys, {Rat(3, 2), Rat(1, 4)}));
}

TEST_CASE("grid oracle") {
    ConstraintSystem sys;
    sys.angle_count = 2;
    sys.linear = {row(Rat(0), {Rat(1), Rat(-1)})};
    auto p = grid_feasible_point(sys, 10);
    REQUIRE(p.has_value());
    CHECK(satisfies_strict(sys, *p));

    ConstraintSystem blocked;
    blocked.angle_count = 1;
    blocked.linear = {row(Rat(-2), {Rat(1)})};
    CHECK_FALSE(grid_feasible_point(blocked, 10).has_value());
}

TEST_CASE("convexity check flags a split region") {
    // (x1 - x2)^2 > 1/16 carves two opposite corners out of the square
    ConstraintSystem sys;
    sys.angle_count = 2;
    QuadraticForm q;
    q.constant = Rat(-1, 16);
    q.quadratic[{0, 0}] = 1;
    q.quadratic[{0, 1}] = -2;
    q.quadratic[{1, 1}] = 1;
    sys.quadratic = q;
    ConvexityResult res = convexity_check(sys, 500);
    CHECK_FALSE(res.ok);
    REQUIRE_FALSE(res.witness_a.empty());
    std::vector<Rat> mid(2);
    for (int i = 0; i < 2; ++i) mid[i] = (res.witness_a[i] + res.witness_b[i]) / 2;
    CHECK(satisfies_strict(sys, res.witness_a));
    CHECK(satisfies_strict(sys, res.witness_b));
    CHECK_FALSE(satisfies_strict(sys, mid));
}

TEST_CASE("convexity of a linear body") {
    ConstraintSystem sys;
    sys.angle_count = 2;
    sys.linear = {row(Rat(0), {Rat(1), Rat(-1)})};
    CHECK(convexity_check(sys, 200).ok);
}

TEST_CASE("sample pool is deterministic") {
    ConstraintSystem sys;
    sys.angle_count = 2;
    sys.linear = {row(Rat(0), {Rat(1), Rat(-1)})};
    auto a = feasible_sample_pool(sys, Rat(1), 8);
    auto b = feasible_sample_pool(sys, Rat(1), 8);
    CHECK(a == b);
    CHECK(a.size() >= 8);
    for (const auto& p : a) CHECK(satisfies_strict(sys, p));
}
