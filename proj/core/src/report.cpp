#include "yblab/report/report.hpp"

#include "json.hpp"

namespace yblab {

std::string scan_report_json(const ScanReport& rep) {
  nlohmann::json j;
  j["family"] = rep.family;
  j["check"] = rep.check;
  j["n"] = rep.n;
  j["total"] = rep.total;
  j["passed"] = rep.passed;
  j["failed"] = rep.failed;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : rep.witnesses)
    j["witnesses"].push_back({{"candidate", w.candidate}, {"residual_support", w.residual_support}});
  j["notes"] = rep.notes;
  return j.dump(2);
}

}  // namespace yblab
