#ifndef LSAC_REPORT_HPP
#define LSAC_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsac/algfile.hpp"
#include "lsac/cohomology.hpp"
#include "lsac/graded.hpp"

namespace lsac {

inline constexpr const char* kToolVersion = "0.1.0";

/// Everything one invocation computed, ready for rendering. Either plain
/// results per degree or graded results per degree, never both.
struct RunReport {
  const AlgebraInput* input = nullptr;
  std::string input_path;
  std::string input_hash;  // fnv1a64 of the file bytes
  std::map<std::string, std::string> flags;
  std::vector<CohomologyResult> results;
  std::vector<GradedCohomology> graded_results;
  bool graded = false;
};

std::uint64_t fnv1a64(const std::string& bytes);

/// Human-readable table, the CLI's stdout. Deterministic byte-for-byte.
std::string human_report(const RunReport& report);

/// Machine-readable JSON document with dims, bases as coefficient lists over
/// named index tuples, and provenance (input hash, version, flags).
std::string json_report(const RunReport& report);

}  // namespace lsac

#endif
