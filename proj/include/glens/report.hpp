#pragma once

#include <string>
#include <vector>

namespace glens {

// One failed check: a rule name, the ids it failed at, and a short note.
struct Violation {
  std::string rule;
  std::vector<long long> at;
  std::string note;

  bool operator==(const Violation&) const = default;
};

struct LawReport {
  std::string subject;
  long long checks = 0;
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  void fail(std::string rule, std::vector<long long> at, std::string note = "") {
    violations.push_back({std::move(rule), std::move(at), std::move(note)});
  }
};

struct IsoReport {
  std::string subject;
  long long checks = 0;
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  void fail(std::string rule, std::vector<long long> at, std::string note = "") {
    violations.push_back({std::move(rule), std::move(at), std::move(note)});
  }
};

}  // namespace glens
