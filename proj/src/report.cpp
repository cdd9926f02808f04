#include "symcoh/report.hpp"

#include <algorithm>

namespace symcoh {

void VerificationReport::add(std::string name, int degree, std::vector<int> indices, bool holds, bool required) {
  checks.push_back({std::move(name), degree, std::move(indices), holds, required});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds || !c.required; });
}

std::vector<IdentityCheck> VerificationReport::failures() const {
  std::vector<IdentityCheck> out;
  for (const IdentityCheck& c : checks) {
    if (!c.holds && c.required) out.push_back(c);
  }
  return out;
}

std::string describe(const IdentityCheck& c) {
  std::string s = c.name + " n=" + std::to_string(c.degree);
  if (!c.indices.empty()) {
    s += " [";
    for (std::size_t i = 0; i < c.indices.size(); ++i) s += (i ? "," : "") + std::to_string(c.indices[i]);
    s += "]";
  }
  s += c.holds ? ": ok" : (c.required ? ": FAILED" : ": differs (informational)");
  return s;
}

}  // namespace symcoh
