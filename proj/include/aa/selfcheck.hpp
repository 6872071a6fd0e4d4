#pragma once

// Named verification checks covering the key identities and result
// statements; shared between the acceptance binary and the `verify`
// subcommand.

#include <aa/tailblowup.hpp>

#include <string>
#include <vector>

namespace aa {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // short diagnostic, empty on success
};

std::vector<std::string> check_names();

/// Runs one named check; throws std::invalid_argument on unknown name.
CheckResult run_check(const std::string& name);

std::vector<CheckResult> run_all_checks();

// Reference systems used by both checks and the CLI.

/// Nakai system of (F_n, -K, chain = negative section): section and
/// fiber rows plus the square.
ConstraintSystem hirzebruch_section_system(int n);

/// Nakai system of (Bl_p P^2, pullback of a line, boundary = the
/// exceptional curve): rows against the exceptional curve and the line
/// through p, plus the square.
ConstraintSystem plane_blowup_system();

/// Chain (Z_n + F) on F_n, path order.
BoundaryChain hirzebruch_zf_chain(const SurfaceModel& s);

/// Boundary + built-in catalog rows + square for a tail sequence; the
/// system classify_tail decides.
ConstraintSystem tail_nakai_system(const TailSequenceSpec& spec);

} // namespace aa
