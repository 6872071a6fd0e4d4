#include <aa/lattice.hpp>

#include <stdexcept>

namespace aa {

SurfaceModel make_projective_plane() {
    SurfaceModel S;
    S.base = SurfaceModel::Base::ProjectivePlane;
    return S;
}

SurfaceModel make_hirzebruch(int n) {
    if (n < 0) throw std::invalid_argument("Hirzebruch index must be nonnegative");
    SurfaceModel S;
    S.base = SurfaceModel::Base::Hirzebruch;
    S.hirzebruch_n = n;
    return S;
}

Rat intersect(const SurfaceModel& S, const DivisorClass& A, const DivisorClass& B) {
    const int k = S.rank();
    if (static_cast<int>(A.coords.size()) != k || static_cast<int>(B.coords.size()) != k)
        throw std::invalid_argument("divisor class dimension mismatch");
    Rat out = 0;
    if (S.base == SurfaceModel::Base::ProjectivePlane) {
        out += A.coords[0] * B.coords[0];
    } else {
        // basis (Z_n, F): Z^2 = -n, Z.F = 1, F^2 = 0
        out += -Rat(S.hirzebruch_n) * A.coords[0] * B.coords[0];
        out += A.coords[0] * B.coords[1] + A.coords[1] * B.coords[0];
    }
    for (int i = S.base_rank(); i < k; ++i)
        out -= A.coords[i] * B.coords[i];
    return out;
}

DivisorClass canonical_class(const SurfaceModel& S) {
    DivisorClass K;
    K.coords.assign(S.rank(), Rat(0));
    if (S.base == SurfaceModel::Base::ProjectivePlane) {
        K.coords[0] = -3;
    } else {
        K.coords[0] = -2;
        K.coords[1] = -(S.hirzebruch_n + 2);
    }
    // each blow-up adds +E^tot
    for (int i = S.base_rank(); i < S.rank(); ++i)
        K.coords[i] = 1;
    return K;
}

DivisorClass basis_class(const SurfaceModel& S, int i) {
    if (i < 0 || i >= S.rank()) throw std::out_of_range("basis index");
    DivisorClass D;
    D.coords.assign(S.rank(), Rat(0));
    D.coords[i] = 1;
    return D;
}

DivisorClass zero_class(const SurfaceModel& S) {
    DivisorClass D;
    D.coords.assign(S.rank(), Rat(0));
    return D;
}

SurfaceModel blow_up(const SurfaceModel& S, CenterSpec center, int num_components) {
    for (const auto& [idx, mult] : center.incidences) {
        if (idx < 0 || (num_components >= 0 && idx >= num_components))
            throw std::invalid_argument("blow-up center references an invalid curve");
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
    }
    SurfaceModel out = S;
    out.blowups.push_back(BlowUpRecord{std::move(center), S.rank()});
    return out;
}

DivisorClass pullback(const SurfaceModel& S_after, const DivisorClass& D) {
    if (static_cast<int>(D.coords.size()) + 1 != S_after.rank())
        throw std::invalid_argument("pullback: class does not live one blow-up below");
    DivisorClass out = D;
    out.coords.emplace_back(0);
    return out;
}

DivisorClass strict_transform(const SurfaceModel& S_after, const DivisorClass& D, int mult) {
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    DivisorClass out = pullback(S_after, D);
    out.coords.back() = -Rat(mult);
    return out;
}

DivisorClass add(const DivisorClass& A, const DivisorClass& B) {
    if (A.coords.size() != B.coords.size())
        throw std::invalid_argument("divisor class dimension mismatch");
    DivisorClass out = A;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += B.coords[i];
    return out;
}

DivisorClass sub(const DivisorClass& A, const DivisorClass& B) {
    if (A.coords.size() != B.coords.size())
        throw std::invalid_argument("divisor class dimension mismatch");
    DivisorClass out = A;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= B.coords[i];
    return out;
}

DivisorClass scale(const Rat& t, const DivisorClass& A) {
    DivisorClass out = A;
    for (auto& c : out.coords) c *= t;
    return out;
}

} // namespace aa
