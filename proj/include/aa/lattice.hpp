#pragma once

// Picard lattices of P^2, Hirzebruch surfaces F_n, and their iterated
// blow-ups.  Divisor classes are coordinate vectors in the basis
// (base generators, E_1^tot, ..., E_x^tot) where E_k^tot is the total
// transform of the k-th exceptional curve, so the intersection form
// stays block-diagonal: the base block plus one [-1] per blow-up.

#include <aa/rational.hpp>

#include <utility>
#include <vector>

namespace aa {

/// Combinatorial blow-up center: the boundary components the point lies
/// on, each with its multiplicity.  A smooth point of one component is a
/// singleton with multiplicity 1; a node of the chain has two entries.
struct CenterSpec {
    std::vector<std::pair<int, int>> incidences; // (component index, multiplicity)
};

struct BlowUpRecord {
    CenterSpec center;
    int exceptional_index; // coordinate slot of the new E^tot
};

struct SurfaceModel {
    enum class Base { ProjectivePlane, Hirzebruch };

    Base base = Base::ProjectivePlane;
    int hirzebruch_n = 0;
    std::vector<BlowUpRecord> blowups;

    int base_rank() const { return base == Base::ProjectivePlane ? 1 : 2; }
    int rank() const { return base_rank() + static_cast<int>(blowups.size()); }
};

/// Coordinate vector of exact rationals; length must equal the rank of
/// the owning surface.  Classes from different surfaces never mix.
struct DivisorClass {
    std::vector<Rat> coords;

    bool operator==(const DivisorClass&) const = default;
};

SurfaceModel make_projective_plane();
SurfaceModel make_hirzebruch(int n);

/// Symmetric bilinear intersection pairing.  Throws on dimension mismatch.
Rat intersect(const SurfaceModel& S, const DivisorClass& A, const DivisorClass& B);

DivisorClass canonical_class(const SurfaceModel& S);

/// The i-th basis class (Z_n/F or H for the base slots, E_k^tot after).
DivisorClass basis_class(const SurfaceModel& S, int i);

DivisorClass zero_class(const SurfaceModel& S);

/// Appends one blow-up record; rank grows by 1 and the form gains a
/// [-1] block.  `num_components` bounds the valid curve indices in the
/// center (pass -1 to skip the check).
SurfaceModel blow_up(const SurfaceModel& S, CenterSpec center, int num_components = -1);

/// Total transform of a class living on the model before the last
/// blow-up: coordinates extended by 0 in the new exceptional slot.
DivisorClass pullback(const SurfaceModel& S_after, const DivisorClass& D);

/// pullback(D) - mult * E^tot for the last blow-up.
DivisorClass strict_transform(const SurfaceModel& S_after, const DivisorClass& D, int mult);

DivisorClass add(const DivisorClass& A, const DivisorClass& B);
DivisorClass sub(const DivisorClass& A, const DivisorClass& B);
DivisorClass scale(const Rat& t, const DivisorClass& A);

} // namespace aa
