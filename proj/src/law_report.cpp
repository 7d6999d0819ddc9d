#include "contralg/law_report.hpp"

#include <algorithm>
#include <sstream>

namespace contralg {

void LawReport::mark_law(const std::string& law) {
  if (std::find(laws_.begin(), laws_.end(), law) == laws_.end()) laws_.push_back(law);
}

void LawReport::add(const std::string& law, std::vector<int> where, std::string detail) {
  mark_law(law);
  ++violations_total_;
  if (violations_.size() < kMaxStored)
    violations_.push_back(Violation{law, std::move(where), std::move(detail)});
}

bool LawReport::law_passed(const std::string& law) const {
  for (const auto& v : violations_)
    if (v.law == law) return false;
  // Witnesses beyond the cap only ever repeat laws already stored, because
  // sweeps run law by law.
  return true;
}

nlohmann::ordered_json LawReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["status"] = passed() ? "PASS" : "FAIL";
  j["checks"] = checks_;
  j["laws"] = laws_;
  j["violations_total"] = violations_total_;
  auto vs = nlohmann::ordered_json::array();
  for (const auto& v : violations_) {
    nlohmann::ordered_json jv;
    jv["law"] = v.law;
    jv["where"] = v.where;
    jv["detail"] = v.detail;
    vs.push_back(std::move(jv));
  }
  j["violations"] = std::move(vs);
  return j;
}

std::string LawReport::summary() const {
  std::ostringstream os;
  os << suite_ << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks_ << " checks";
  if (!passed()) os << ", " << violations_total_ << " violations";
  os << ")";
  if (laws_.size() > 1) {
    os << "\n  laws:";
    for (const auto& law : laws_) os << " " << law << (law_passed(law) ? " ok;" : " FAIL;");
  }
  for (std::size_t i = 0; i < violations_.size() && i < 4; ++i)
    os << "\n  " << violations_[i].law << ": " << violations_[i].detail;
  if (violations_total_ > 4) os << "\n  ...";
  return os.str();
}

}  // namespace contralg
