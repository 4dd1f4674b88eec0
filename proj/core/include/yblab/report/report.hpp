#pragma once

#include <string>
#include <vector>

namespace yblab {

// One verification scan over a stream of candidates.  Witnesses record the
// failing candidates (flat matrix/array text plus the residual support size).
struct ScanWitness {
  std::string candidate;
  std::size_t residual_support = 0;
};

struct ScanReport {
  std::string family;
  std::string check;
  int n = 0;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<ScanWitness> witnesses;

  // side observations, e.g. quasi-triangularity flags per candidate
  std::vector<std::string> notes;

  bool all_passed() const { return failed == 0 && passed == total; }
};

std::string scan_report_json(const ScanReport& rep);

}  // namespace yblab
