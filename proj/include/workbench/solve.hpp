#pragma once

#include "workbench/verify.hpp"

namespace wb {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveBudget {
    uint64_t max_enumerations = uint64_t{1} << 16;  // walk universe cap
    uint64_t max_evals = uint64_t{1} << 24;         // total Function evaluations
};

/// Majority walk over the universe. Deterministic: partition ties go to the
/// predicate-value-0 side, "arbitrary element" is the smallest in the chosen
/// side; Constrained instances start at a0.
ChoiceSeqCert solve_long_choice_majority(const LongChoiceInstance& inst,
                                         const SolveBudget& budget = {});

/// Minority walk; returns as soon as a partition side is empty.
ShortCert solve_short_choice_minority(const ShortChoiceInstance& inst,
                                      const SolveBudget& budget = {});

/// One-color-forward node sequence: length 2n+1 for 2 colors, node_width+1
/// in the general case (subsampled at stride log2 r by extract_clique).
std::vector<uint64_t> solve_ramsey_sequence(const Ramsey2Instance& inst,
                                            const SolveBudget& budget = {});
std::vector<uint64_t> solve_ramsey_sequence(const RamseyRInstance& inst,
                                            const SolveBudget& budget = {});

/// Pigeonholes the assigned forward colors of a solver-produced sequence
/// into a monochromatic clique certificate.
CliqueCert extract_clique(const Ramsey2Instance& inst,
                          const std::vector<uint64_t>& seq);
CliqueCert extract_clique(const RamseyRInstance& inst,
                          const std::vector<uint64_t>& seq);

/// Exhaustive search in canonical order (single-index scans ascending, then
/// lexicographic pair scans); returns the first certificate verify accepts.
Certificate solve_bruteforce(const Instance& inst, const SolveBudget& budget = {});

/// Convenience: solve-and-verify dispatch by solver name
/// ("majority" | "minority" | "ramsey" | "brute").
Certificate solve(const Instance& inst, const std::string& solver,
                  const SolveBudget& budget = {});

}  // namespace wb
