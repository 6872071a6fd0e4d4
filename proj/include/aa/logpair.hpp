#pragma once

// Boundary chains and the angle-parametrized twisted classes
//   L_beta = L - sum_i (1 - beta_i) C_i,
//   K_beta = K_S + sum_i (1 - beta_i) C_i = -( -K_S )_beta.
// Coordinates of these classes are affine-linear forms in the angles.

#include <aa/forms.hpp>
#include <aa/lattice.hpp>

#include <string>
#include <vector>

namespace aa {

struct BoundaryChain {
    std::vector<DivisorClass> components; // angle order, not necessarily path order
    std::vector<std::string> component_ids;

    int size() const { return static_cast<int>(components.size()); }
};

enum class ChainKind { Chain, Cycle, DisjointChains, Invalid };

/// Classification of the incidence graph C_i.C_j.
ChainKind verify_chain(const SurfaceModel& S, const BoundaryChain& C);

/// Throws unless C is a connected chain listed in path order whose
/// components are rational curves (adjunction C_i.(C_i+K) = -2).
void validate_base_chain(const SurfaceModel& S, const BoundaryChain& C);

/// A divisor class whose coordinates are affine-linear in the angles.
struct AngleClass {
    std::vector<LinearForm> coords;

    bool operator==(const AngleClass&) const = default;
};

AngleClass negate(const AngleClass& A);
DivisorClass evaluate(const AngleClass& A, const std::vector<Rat>& angles);

/// L_beta = L - sum (1 - beta_i) C_i, angle i = position of C_i in the chain.
AngleClass twisted_class(const SurfaceModel& S, const DivisorClass& L, const BoundaryChain& C);

/// K_beta = K_S + sum (1 - beta_i) C_i; equals K_S at beta = (1,...,1).
AngleClass log_canonical_class(const SurfaceModel& S, const BoundaryChain& C);

/// Exact linear form beta -> (A evaluated at beta) . Z.
LinearForm intersect_with_class(const SurfaceModel& S, const AngleClass& A, const DivisorClass& Z);

/// Exact quadratic form beta -> (A evaluated at beta)^2.
QuadraticForm square(const SurfaceModel& S, const AngleClass& A);

/// Lattice side of a tail blow-up sequence: h right blow-ups followed by
/// v left blow-ups of a base chain pair.  Components stay in angle order
/// (c_1..c_r, H_1..H_h, V_1..V_v).
struct TailLattice {
    SurfaceModel S;
    BoundaryChain C;
    AngleVector angles;
    std::vector<int> h_slots; // lattice slots of H_i^tot
    std::vector<int> v_slots; // lattice slots of V_j^tot
};

TailLattice tail_blowups(const SurfaceModel& s, const BoundaryChain& c, int h, int v);

/// Blows up the node between components i and i+1 of a path-ordered
/// chain; the exceptional curve is inserted between them and the
/// boundary stays a chain (one component longer).
std::pair<SurfaceModel, BoundaryChain> node_blowup(const SurfaceModel& S, const BoundaryChain& C,
                                                   int i);

/// Checks the exact identity expressing K on the blown-up pair through
/// pullbacks of K on the base plus (1 - eta_i + eta_{i-1}) / (1 - nu_j +
/// nu_{j-1}) multiples of the pulled-back exceptionals.
bool verify_pullback_formula(const SurfaceModel& s, const BoundaryChain& c, int h, int v);

} // namespace aa
