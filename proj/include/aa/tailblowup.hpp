#pragma once

// Tail blow-up sequences: the explicit block LP matrix attached to a
// sequence, the boundary-only tilde system, classification of sequences,
// and machine verification that the boundary-only system is always
// feasible near the origin.

#include <aa/feasibility.hpp>

#include <string>
#include <vector>

namespace aa {

struct TailSequenceSpec {
    SurfaceModel base_surface;
    BoundaryChain base_chain; // path order, c_1 .. c_r
    int h = 0;                // right-tail blow-ups (c_r side)
    int v = 0;                // left-tail blow-ups (c_1 side)

    int x() const { return h + v; }
};

/// (K_s + c)^2: the maximal number of tail blow-ups compatible with the
/// asymptotically-log-Fano property; drops by exactly 1 per blow-up.
Rat budget(const SurfaceModel& s, const BoundaryChain& c);

/// Performs the h right / v left single tail blow-ups.  Throws when the
/// base boundary is a cycle (no tails) or not a valid chain.
TailLattice apply_tail_sequence(const TailSequenceSpec& spec);

/// The (r+h+v) x (r+2h+2v) block matrix encoding the near-origin
/// boundary inequalities together with the positive-orthant identity
/// block.  Column order: v_r (h>0), v_1 (v>0), the tridiagonal
/// second-difference columns (right side then left), then the identity.
struct PaperLPMatrix {
    int r = 0, h = 0, v = 0;
    long c1_sq = 0, cr_sq = 0;
    std::vector<std::vector<Rat>> columns; // each of length r+h+v

    int rows() const { return r + h + v; }
    int constraint_columns() const { return static_cast<int>(columns.size()) - rows(); }
};

PaperLPMatrix build_paper_lp_matrix(int r, int h, int v, long c1_sq, long cr_sq);

/// Boundary-only strict system K_beta . C_i < 0 (positivity orientation),
/// no quadratic.
ConstraintSystem build_tilde_lp(const TailLattice& T);

struct Thm1Result {
    bool feasible = false;
    FeasibilityCertificate certificate;
    HomogeneousSystem system;
};

/// Gordan check of the block-matrix system; expected Feasible for every
/// parameter choice.
Thm1Result verify_thm_tail1(int r, int h, int v, long c1_sq, long cr_sq);

/// Built-in curve catalog: strict transforms of the fiber (line, for a
/// plane base) through each side's blown-up base point, plus the
/// negative section when it is not already a boundary component.
/// Centers are treated as generic on their components, so only the
/// first blow-up of a side meets its fiber.
std::vector<LabeledCurve> catalog_curves(const TailSequenceSpec& spec, const TailLattice& T);

enum class TailVerdict { NotALF_Budget, NotALF_LP, ALF_ModuloCurves, ALF_Verified };

std::string to_string(TailVerdict v);

struct TailEvidence {
    TailVerdict verdict = TailVerdict::NotALF_LP;
    Rat budget_value;
    int x = 0;
    bool r_equals_one = false; // chains of length 1 are allowed but flagged
    std::optional<QuadraticVerdict> quadratic_verdict;
    OriginCheck origin;
    ConstraintSystem system;            // empty for a budget verdict
    std::vector<std::string> curve_labels; // curve list the verdict is relative to
};

/// Classification per the budget condition and near-origin feasibility
/// of boundary + catalog + caller-supplied curve constraints plus the
/// quadratic.  A feasible verdict is only ALF_Verified when the caller
/// asserts the curve list is complete.
TailEvidence classify_tail(const TailSequenceSpec& spec, const std::vector<LabeledCurve>& extra,
                           bool curves_complete = false);

struct CrossCheckResult {
    bool ok = false;
    std::string detail;
};

/// Matches the lattice-derived near-origin system of the tilde-LP
/// against the block matrix: the rows coming from new exceptionals and
/// old tails must biject onto the non-identity columns entry-for-entry
/// (the old-tail columns after adding the +1 the block matrix drops for
/// the chain neighbor), and rows of interior old components must follow
/// the adjunction pattern beta_{i-1} + c_i^2 beta_i + beta_{i+1}.
/// Requires r >= 2.
CrossCheckResult cross_check_paper_matrix(const TailSequenceSpec& spec);

} // namespace aa
