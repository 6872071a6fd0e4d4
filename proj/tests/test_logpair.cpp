#include <aa/logpair.hpp>

#include <doctest.h>

using namespace aa;

namespace {

BoundaryChain zf_chain(const SurfaceModel& s) {
    BoundaryChain c;
    c.components = {basis_class(s, 0), basis_class(s, 1)};
    c.component_ids = {"Z", "F"};
    return c;
}

} // namespace

TEST_CASE("chain classification") {
    SurfaceModel fn = make_hirzebruch(2);
    CHECK(verify_chain(fn, zf_chain(fn)) == ChainKind::Chain);

    SurfaceModel p2 = make_projective_plane();
    BoundaryChain triangle; // three lines in general position close up
    triangle.components = {basis_class(p2, 0), basis_class(p2, 0), basis_class(p2, 0)};
    CHECK(verify_chain(p2, triangle) == ChainKind::Cycle);

    BoundaryChain disjoint; // Z and Z+nF do not meet
    disjoint.components = {basis_class(fn, 0),
                           add(basis_class(fn, 0), scale(Rat(2), basis_class(fn, 1)))};
    CHECK(verify_chain(fn, disjoint) == ChainKind::DisjointChains);

    BoundaryChain tangent; // pairing 2 is not a transverse chain node
    tangent.components = {basis_class(p2, 0), scale(Rat(2), basis_class(p2, 0))};
    CHECK(verify_chain(p2, tangent) == ChainKind::Invalid);
}

TEST_CASE("base chain validation") {
    SurfaceModel fn = make_hirzebruch(1);
    CHECK_NOTHROW(validate_base_chain(fn, zf_chain(fn)));

    SurfaceModel p2 = make_projective_plane();
    BoundaryChain cubic; // genus 1, fails rational-curve adjunction
    cubic.components = {scale(Rat(3), basis_class(p2, 0))};
    CHECK_THROWS_AS(validate_base_chain(p2, cubic), std::invalid_argument);
}

TEST_CASE("twisted class of the basic plane blow-up") {
    SurfaceModel s = blow_up(make_projective_plane(), CenterSpec{});
    BoundaryChain c;
    c.components = {basis_class(s, 1)};
    c.component_ids = {"E"};
    DivisorClass L = pullback(s, basis_class(make_projective_plane(), 0));
    AngleClass Lb = twisted_class(s, L, c);

    LinearForm against_e = intersect_with_class(s, Lb, c.components[0]);
    CHECK(against_e == LinearForm(Rat(1)) - LinearForm::variable(0)); // 1 - beta
    LinearForm against_line = intersect_with_class(s, Lb, sub(L, basis_class(s, 1)));
    CHECK(against_line == LinearForm::variable(0)); // beta

    DivisorClass at_half = evaluate(Lb, {Rat(1, 2)});
    CHECK(at_half.coords == std::vector<Rat>{Rat(1), Rat(-1, 2)});
}

TEST_CASE("log canonical class interpolates to K") {
    SurfaceModel fn = make_hirzebruch(3);
    BoundaryChain c = zf_chain(fn);
    AngleClass Kb = log_canonical_class(fn, c);
    CHECK(evaluate(Kb, {Rat(1), Rat(1)}) == canonical_class(fn));
    // at beta = 0 it is K + C
    DivisorClass KC = add(canonical_class(fn), add(c.components[0], c.components[1]));
    CHECK(evaluate(Kb, {Rat(0), Rat(0)}) == KC);
}

TEST_CASE("intersections of the anti log canonical class on F_n") {
    for (int n = 1; n <= 4; ++n) {
        SurfaceModel fn = make_hirzebruch(n);
        BoundaryChain c;
        c.components = {basis_class(fn, 0)};
        c.component_ids = {"Z"};
        AngleClass mKb = negate(log_canonical_class(fn, c));
        CHECK(intersect_with_class(fn, mKb, basis_class(fn, 0)) ==
              LinearForm(Rat(2)) - LinearForm::variable(0, Rat(n)));
        CHECK(intersect_with_class(fn, mKb, basis_class(fn, 1)) ==
              LinearForm(Rat(1)) + LinearForm::variable(0));
    }
}

TEST_CASE("square of an angle class") {
    SurfaceModel fn = make_hirzebruch(3);
    BoundaryChain c;
    c.components = {basis_class(fn, 0)};
    AngleClass mKb = negate(log_canonical_class(fn, c));
    QuadraticForm q = square(fn, mKb);
    CHECK(q.evaluate({Rat(0)}) == 7);
    CHECK(q.evaluate({Rat(1)}) == 8);             // (-K)^2
    CHECK(q.evaluate({Rat(1, 2)}) == Rat(33, 4)); // 7 + 2 - 3/4
}

TEST_CASE("tail blow-ups") {
    SurfaceModel fn = make_hirzebruch(1);
    BoundaryChain c = zf_chain(fn);
    TailLattice T = tail_blowups(fn, c, 2, 1);
    CHECK(T.S.rank() == 5);
    CHECK(T.C.size() == 5);
    CHECK(T.C.component_ids == std::vector<std::string>{"Z", "F", "H1", "H2", "V1"});
    CHECK(verify_chain(T.S, T.C) == ChainKind::Chain);
    CHECK(T.h_slots == std::vector<int>{2, 3});
    CHECK(T.v_slots == std::vector<int>{4});

    // each end strict transform lost one from its self-intersection
    CHECK(intersect(T.S, T.C.components[1], T.C.components[1]) == -1); // F
    CHECK(intersect(T.S, T.C.components[2], T.C.components[2]) == -2); // H1
    CHECK(intersect(T.S, T.C.components[3], T.C.components[3]) == -1); // H2 (new end)
    CHECK(intersect(T.S, T.C.components[0], T.C.components[0]) == -2); // Z
}

TEST_CASE("node blow-up keeps a chain") {
    SurfaceModel fn = make_hirzebruch(2);
    auto [s3, c3] = node_blowup(fn, zf_chain(fn), 0);
    CHECK(c3.size() == 3);
    CHECK_NOTHROW(validate_base_chain(s3, c3));
    CHECK(intersect(s3, c3.components[0], c3.components[0]) == -3);
    CHECK(intersect(s3, c3.components[1], c3.components[1]) == -1);
    CHECK(intersect(s3, c3.components[2], c3.components[2]) == -1);
}

TEST_CASE("pullback identity") {
    for (int n = 0; n <= 2; ++n) {
        SurfaceModel fn = make_hirzebruch(n);
        BoundaryChain c = zf_chain(fn);
        for (int h = 0; h <= 2; ++h)
            for (int v = 0; v <= 2; ++v) CHECK(verify_pullback_formula(fn, c, h, v));
    }
}
