#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hopnorms::validate {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;  // error within tolerance
  // Formulas kept as published although they disagree with their oracle.
  // Reported, never counted as failures.
  bool informational = false;
  double measured = 0.0;
  double reference = 0.0;
  double error = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  int failures() const;
  const CheckResult* find(const std::string& name) const;
};

const std::vector<std::string>& suite_names();  // identities, convergence, paper-closed-forms, all

// Throws InvalidInput for an unknown suite.
Report run_suite(const std::string& suite);

// "PASS  suite/name  measured=... reference=... error=... tol=..." (INFO for informational checks).
std::string format_line(const CheckResult& c);
nlohmann::json to_json(const Report& r);

}  // namespace hopnorms::validate
