#pragma once

#include "polyharm/bipoly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyharm {

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SuiteFailure {
    std::string input;
    std::string expected;
    std::string got;
};

struct SuiteReport {
    std::string suite_name;
    std::size_t cases_run = 0;
    std::size_t failures = 0;
    std::optional<SuiteFailure> first_failure;  // present iff failures > 0
    std::uint64_t seed = 0;
    /// Named evidence counts in a fixed order (suite specific).
    std::vector<std::pair<std::string, std::size_t>> counters;

    std::size_t counter(std::string_view name) const;
};

struct SuiteOptions {
    /// conjecture_search only: fixed l, or 0 to alternate l = 3, 4 by case.
    unsigned l = 0;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// thm1_suff, thm1_nec, thm2_suff, thm2_nec, thm3, prop21, prop22,
/// conjecture_search.
const std::vector<std::string>& suite_names();

/// Each case is a pure function of derive_seed(seed, index), so the report
/// does not depend on the thread count. Throws UnknownSuite.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, std::size_t cases,
                      SuiteOptions options = {});

/// One conjecture-search case, reproducible from its printed seed.
struct ConjectureCase {
    std::uint64_t case_seed = 0;
    unsigned l = 0;
    BiPoly f;
    /// Some sampled harmonic F already pushed F∘f out of H_l.
    bool sampled_violation = false;
    /// Otherwise the power family w^m did.
    bool family_violation = false;
    std::optional<BiPoly> violating_F;

    bool candidate() const { return !sampled_violation && !family_violation; }
};

ConjectureCase conjecture_case(std::uint64_t case_seed, unsigned l);

}  // namespace polyharm
