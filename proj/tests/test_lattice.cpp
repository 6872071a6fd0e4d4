#include <aa/lattice.hpp>

#include <doctest.h>

using namespace aa;

TEST_CASE("projective plane pairing") {
    SurfaceModel p2 = make_projective_plane();
    CHECK(p2.rank() == 1);
    DivisorClass H = basis_class(p2, 0);
    CHECK(intersect(p2, H, H) == 1);
    DivisorClass K = canonical_class(p2);
    CHECK(K.coords == std::vector<Rat>{Rat(-3)});
    CHECK(intersect(p2, K, K) == 9);
}

TEST_CASE("hirzebruch pairing") {
    for (int n = 0; n <= 4; ++n) {
        SurfaceModel fn = make_hirzebruch(n);
        CHECK(fn.rank() == 2);
        DivisorClass Z = basis_class(fn, 0);
        DivisorClass F = basis_class(fn, 1);
        CHECK(intersect(fn, Z, Z) == -n);
        CHECK(intersect(fn, Z, F) == 1);
        CHECK(intersect(fn, F, F) == 0);
        DivisorClass K = canonical_class(fn);
        CHECK(K.coords == std::vector<Rat>{Rat(-2), Rat(-(n + 2))});
        CHECK(intersect(fn, K, K) == 8);
        CHECK(intersect(fn, K, Z) == n - 2);
        CHECK(intersect(fn, K, F) == -2);
    }
}

TEST_CASE("blow-up bookkeeping") {
    SurfaceModel s = make_projective_plane();
    SurfaceModel s2 = blow_up(s, CenterSpec{});
    CHECK(s2.rank() == 2);
    DivisorClass E = basis_class(s2, 1);
    CHECK(intersect(s2, E, E) == -1);

    // K gains +1 on the new slot
    CHECK(canonical_class(s2).coords == std::vector<Rat>{Rat(-3), Rat(1)});

    DivisorClass H = basis_class(s, 0);
    DivisorClass pb = pullback(s2, H);
    CHECK(pb.coords == std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(intersect(s2, pb, pb) == 1);  // pullback preserves products
    CHECK(intersect(s2, pb, E) == 0);   // and misses the exceptional curve

    DivisorClass line_through_p = strict_transform(s2, H, 1);
    CHECK(line_through_p.coords == std::vector<Rat>{Rat(1), Rat(-1)});
    CHECK(intersect(s2, line_through_p, line_through_p) == 0);
    CHECK(intersect(s2, line_through_p, E) == 1);
}

TEST_CASE("iterated blow-ups stay block diagonal") {
    SurfaceModel s = make_hirzebruch(2);
    s = blow_up(s, CenterSpec{});
    s = blow_up(s, CenterSpec{});
    CHECK(s.rank() == 4);
    DivisorClass e1 = basis_class(s, 2), e2 = basis_class(s, 3);
    CHECK(intersect(s, e1, e2) == 0);
    CHECK(intersect(s, e1, e1) == -1);
    CHECK(intersect(s, canonical_class(s), canonical_class(s)) == 6);
}

TEST_CASE("class arithmetic") {
    SurfaceModel fn = make_hirzebruch(1);
    DivisorClass Z = basis_class(fn, 0), F = basis_class(fn, 1);
    DivisorClass sum = add(Z, scale(Rat(3), F));
    CHECK(sum.coords == std::vector<Rat>{Rat(1), Rat(3)});
    CHECK(sub(sum, Z).coords == std::vector<Rat>{Rat(0), Rat(3)});
    CHECK(zero_class(fn).coords == std::vector<Rat>{Rat(0), Rat(0)});
}

TEST_CASE("dimension and center validation") {
    SurfaceModel p2 = make_projective_plane();
    SurfaceModel fn = make_hirzebruch(1);
    CHECK_THROWS_AS(intersect(p2, basis_class(fn, 0), basis_class(p2, 0)), std::invalid_argument);
    CHECK_THROWS_AS(blow_up(p2, CenterSpec{{{5, 1}}}, 2), std::invalid_argument);
}
