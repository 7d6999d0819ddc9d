#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace contralg {

// One failed instance of a law: which law, which elements, and a rendered
// explanation. Violations are data, not errors; callers decide what to do.
struct Violation {
  std::string law;
  std::vector<int> where;
  std::string detail;
};

class LawReport {
 public:
  // Stored-witness cap; violations_total keeps counting past it so a FAIL on a
  // large carrier does not balloon the report.
  static constexpr std::size_t kMaxStored = 256;

  explicit LawReport(std::string suite) : suite_(std::move(suite)) {}

  void mark_law(const std::string& law);
  void count_check() { ++checks_; }
  void count_checks(long long n) { checks_ += n; }
  void add(const std::string& law, std::vector<int> where, std::string detail);

  const std::string& suite() const { return suite_; }
  bool passed() const { return violations_total_ == 0; }
  long long checks() const { return checks_; }
  long long violations_total() const { return violations_total_; }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<std::string>& laws() const { return laws_; }
  bool law_passed(const std::string& law) const;

  nlohmann::ordered_json to_json() const;
  std::string summary() const;

 private:
  std::string suite_;
  std::vector<std::string> laws_;
  long long checks_ = 0;
  long long violations_total_ = 0;
  std::vector<Violation> violations_;
};

}  // namespace contralg
