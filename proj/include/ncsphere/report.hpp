#ifndef NCSPHERE_REPORT_HPP
#define NCSPHERE_REPORT_HPP

#include <string>
#include <vector>

namespace ncsphere {

struct CheckItem {
  std::string name;
  bool pass = false;
  double residual = 0.0;   // symbolic checks: number of surviving monomials
  std::string detail;      // optional, e.g. the printed defect
};

struct Report {
  std::string title;
  std::vector<CheckItem> checks;

  void add(std::string name, bool pass, double residual, std::string detail = {}) {
    checks.push_back({std::move(name), pass, residual, std::move(detail)});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  double max_residual() const {
    double r = 0.0;
    for (const auto& c : checks) r = std::max(r, c.residual);
    return r;
  }
  void merge(const Report& o) {
    for (const auto& c : o.checks) checks.push_back(c);
  }
};

}  // namespace ncsphere

#endif
