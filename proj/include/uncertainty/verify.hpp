#pragma once

// Invariant suites behind `uncert verify`. Each suite draws its randomness
// from the stream named after it, so a suite's outcome does not depend on
// which other suites run.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uncertainty/experiments.hpp"

namespace uncertainty {

const std::vector<std::string>& verify_suite_names();

// DomainError for an unknown name.
ExperimentReport run_verify_suite(std::string_view name, std::uint64_t seed);

// `filter` is "all", one suite name, or a comma-separated list. Reports come
// back sorted by name.
std::vector<ExperimentReport> run_verify(std::string_view filter, std::uint64_t seed);

}  // namespace uncertainty
