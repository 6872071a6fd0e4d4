#pragma once

// Nakai-Moishezon constraint generation: one strict linear inequality
// per curve ( -K_beta . Z > 0, stored so that form > 0 means ample ),
// plus the single quadratic self-intersection constraint.

#include <aa/logpair.hpp>

#include <optional>
#include <string>
#include <vector>

namespace aa {

struct Provenance {
    enum class Kind { BoundaryComponent, Exceptional, UserCurve, UnitCube };
    Kind kind = Kind::UserCurve;
    int index = -1;    // component / angle index where meaningful
    std::string label;
};

struct StrictInequality {
    LinearForm form; // meaning: form(beta) > 0
    Provenance provenance;
};

struct ConstraintSystem {
    std::vector<StrictInequality> linear;
    std::optional<QuadraticForm> quadratic; // meaning: quadratic(beta) > 0
    int angle_count = 0;
};

struct LabeledCurve {
    std::string label;
    DivisorClass cls;
};

/// One inequality L_beta . C_i > 0 per boundary component, L = -K.
std::vector<StrictInequality> boundary_constraints(const SurfaceModel& S, const BoundaryChain& C);

/// Same against user-supplied irreducible curve classes.
std::vector<StrictInequality> curve_constraints(const SurfaceModel& S, const BoundaryChain& C,
                                                const std::vector<LabeledCurve>& curves);

/// (-K_beta)^2 as an exact quadratic form; constant term is (K_S+C)^2.
QuadraticForm quadratic_constraint(const SurfaceModel& S, const BoundaryChain& C);

enum class QuadraticVerdict { Subcritical, Critical, Supercritical, General };

enum class QuadraticContext { Tail, General };

/// Sign trichotomy of the quadratic near the origin.  Critical means
/// zero constant with a nonnegative linear part that is positive
/// somewhere; General (mixed linear signs at zero constant) needs a
/// ray check downstream.
QuadraticVerdict classify_quadratic(const QuadraticForm& q,
                                    QuadraticContext context = QuadraticContext::General);

struct NearOriginReduction {
    enum class Verdict { Reduced, Infeasible };
    Verdict verdict = Verdict::Reduced;
    // homogeneous rows (coefficient vectors of the zero-constant forms)
    std::vector<std::vector<Rat>> rows;
    std::vector<Provenance> row_provenance;
    int angle_count = 0;
};

/// Drops inequalities with positive constant (vacuous near 0), reports
/// infeasible on a negative constant, and keeps the zero-constant forms
/// as homogeneous rows.
NearOriginReduction near_origin_reduce(const ConstraintSystem& sys);

/// beta_i > 0 and box - beta_i > 0 for every angle.  Tracked separately:
/// they never enter near-origin feasibility.
std::vector<StrictInequality> cube_constraints(int angle_count, const Rat& box = Rat(1));

/// Plain-text H-representation: one row "c a_1 ... a_k > 0" per inequality.
std::string hrep_text(const ConstraintSystem& sys);

} // namespace aa
