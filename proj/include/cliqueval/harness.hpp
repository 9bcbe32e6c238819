#pragma once

#include <cliqueval/packing.hpp>
#include <cliqueval/report.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cliqueval {

struct AnalyzeOptions {
    /// Orders for bound reports; empty means 1..max(1, omega-1).
    std::vector<std::size_t> orders;
    /// Evaluate the proof chain at the largest requested order.
    bool chain = false;
    bool one_based_labels = false;
    SolverBudget budget;
};

auto analyze(const Graph & g, const AnalyzeOptions & options) -> Report;

struct VerifyConfig {
    /// Exhaustive sweep over every labeled graph on this many vertices...
    std::optional<std::size_t> exhaustive_n;
    /// ...or this many seeded random instances.
    std::uint64_t random_count = 0;
    std::uint64_t seed = 0;
    std::size_t random_max_n = 10;

    /// Suites to run; all of them when none is selected.
    bool handshaking = false;
    bool kelly = false;
    bool bounds = false;
    bool oracle = false;
    bool chain = false;

    SolverBudget budget;
};

auto verify(const VerifyConfig & config) -> Report;

struct HuntConfig {
    std::size_t n = 10;
    std::vector<double> p_grid{0.3};
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    std::vector<std::size_t> orders{2};
    /// "bound", "steps", "all" or a single step such as "step:S1".
    std::string target = "bound";
    SolverBudget budget;
};

auto hunt(const HuntConfig & config) -> Report;

/// Size of a maximum independent family found by plain exhaustive search,
/// without any pruning. Reference for the branch-and-bound solver.
auto exhaustive_packing_size(const Graph & g, std::size_t k) -> std::size_t;

/// Decodes the witness and re-runs the named check; true iff it fails again
/// with the recorded lhs and rhs.
auto reproduce_finding(const Finding & finding) -> bool;

}
