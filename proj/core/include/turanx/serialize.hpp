#ifndef TURANX_SERIALIZE_HPP
#define TURANX_SERIALIZE_HPP

#include <string>

#include "turanx/search.hpp"
#include "turanx/suites.hpp"

namespace turanx {

/// {problem, optimum (decimal string), extremal: [graph6...], graphs_examined,
/// elapsed_ms, unique} with sorted keys and a sorted extremal list. Identical
/// runs differ only in elapsed_ms.
std::string to_json(const SearchOutcome& outcome);

/// Suite report JSON: sorted keys, no timing fields, byte-deterministic.
std::string to_json(const SuiteReport& report);

std::string to_csv(const SuiteReport& report);

/// Aligned human-readable table.
std::string to_table(const SuiteReport& report);

} // namespace turanx

#endif
