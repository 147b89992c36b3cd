#ifndef DELTOID_ACCEPTANCE_HPP
#define DELTOID_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace deltoid {

struct Metric {
    std::string name;
    double value = 0;
    /// Human-readable condition, e.g. "< 1e-10".
    std::string bound;
    bool ok = false;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    std::vector<Metric> metrics;
    std::string note;
};

inline constexpr int criterion_count = 12;

/// Runs one acceptance criterion (1..12) at its stated tolerances. Throws
/// std::out_of_range for other ids.
CriterionResult run_criterion(int id, std::uint64_t seed = 1);

std::vector<CriterionResult> run_primary_suite(std::uint64_t seed = 1);

}  // namespace deltoid

#endif  // DELTOID_ACCEPTANCE_HPP
