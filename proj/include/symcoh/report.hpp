#ifndef SYMCOH_REPORT_HPP
#define SYMCOH_REPORT_HPP

#include <string>
#include <vector>

namespace symcoh {

/// One operator identity evaluated at one instance.
struct IdentityCheck {
  std::string name;
  int degree = 0;
  std::vector<int> indices;
  bool holds = false;
  /// Informational checks are reported but do not affect all_hold().
  bool required = true;
};

struct VerificationReport {
  std::vector<IdentityCheck> checks;

  void add(std::string name, int degree, std::vector<int> indices, bool holds, bool required = true);
  void append(const VerificationReport& other);
  bool all_hold() const;
  std::vector<IdentityCheck> failures() const;
};

/// "name n=2 [1,3]: ok" style line.
std::string describe(const IdentityCheck& c);

}  // namespace symcoh

#endif  // SYMCOH_REPORT_HPP
