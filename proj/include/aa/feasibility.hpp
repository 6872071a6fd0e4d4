#pragma once

// Exact linear feasibility: Gordan's theorem of alternatives with
// re-verifiable certificates, Fourier-Motzkin elimination, near-origin
// feasibility, and the body of ample angles.

#include <aa/constraints.hpp>

#include <optional>
#include <vector>

namespace aa {

/// Homogeneous strict system: does some x satisfy x . col > 0 for every
/// column?  Positive-orthant constraints are folded in as identity
/// columns by from_rows(include_orthant = true).
struct HomogeneousSystem {
    int dim = 0;
    std::vector<std::vector<Rat>> columns; // each of length dim

    static HomogeneousSystem from_rows(int dim, const std::vector<std::vector<Rat>>& rows,
                                       bool include_orthant);
};

/// Exactly one alternative: a primal point x with x.col > 0 for all
/// columns, or a dual y >= 0, y != 0 with sum_j y_j col_j = 0.
struct FeasibilityCertificate {
    bool feasible = false;
    std::vector<Rat> point; // when feasible
    std::vector<Rat> dual;  // when infeasible
};

FeasibilityCertificate gordan_feasible(const HomogeneousSystem& sys);

/// Re-verifies a certificate by direct arithmetic.
bool verify_certificate(const HomogeneousSystem& sys, const FeasibilityCertificate& cert);

/// Projects the strict system onto the remaining variables by pairing
/// every lower bound on `var` with every upper bound.  Contradictory
/// bounds surface as unsatisfiable constant rows ("0 > 0").
std::vector<StrictInequality> fourier_motzkin_eliminate(const std::vector<StrictInequality>& rows,
                                                        int var);

/// Full elimination; decides strict feasibility of an affine system.
bool fm_feasible(std::vector<StrictInequality> rows, int nvars);

struct OriginCheck {
    bool in_closure = false;
    bool undetermined = false;
    FeasibilityCertificate certificate;
    HomogeneousSystem system; // what the certificate refers to
    std::optional<QuadraticVerdict> quadratic_verdict;
    std::string note;
};

/// Is the origin in the closure of the feasible set?  Near-origin
/// reduction, then Gordan on the homogeneous part; a General quadratic
/// is resolved along the certificate ray (lowest nonvanishing
/// coefficient), with up to 8 perturbed rays before "undetermined".
OriginCheck origin_in_closure(const ConstraintSystem& sys);

struct BodyOptions {
    Rat box = 1;          // upper bound of the angle box
    int sample_target = 32;
    int fm_dim_limit = 10;
};

struct AmpleAngleBody {
    int dim = 0;
    std::vector<StrictInequality> hrep; // includes the box constraints
    std::optional<QuadraticForm> quadratic;
    bool empty = false;
    std::vector<std::vector<Rat>> vertices; // closure of the linear part, dim <= 4
    std::vector<int> vertex_quadratic_sign; // -1/0/+1, or 2 when no quadratic
    std::vector<std::vector<Rat>> samples;  // verified interior points, dim > 4
    std::vector<int> sample_quadratic_sign;
};

AmpleAngleBody ample_angle_body(const ConstraintSystem& sys, const BodyOptions& options = {});

/// Strict membership: every linear form, the box, and the quadratic.
bool satisfies_strict(const ConstraintSystem& sys, const std::vector<Rat>& point,
                      const Rat& box = Rat(1));

struct ConvexityResult {
    bool ok = true;
    int trials_run = 0;
    std::vector<Rat> witness_a, witness_b; // counterexample pair on failure
};

/// Midpoints of verified-feasible point pairs must stay feasible.
ConvexityResult convexity_check(const ConstraintSystem& sys, int trials,
                                const BodyOptions& options = {});

/// Rational grid scan of (0,1)^k at step 1/steps; first strictly
/// feasible grid point, if any.  Independent oracle for small systems.
std::optional<std::vector<Rat>> grid_feasible_point(const ConstraintSystem& sys, int steps);

/// Deterministic low-discrepancy feasible points (for pools and samples).
std::vector<std::vector<Rat>> feasible_sample_pool(const ConstraintSystem& sys, const Rat& box,
                                                   int target);

} // namespace aa
