#ifndef SYMCOH_BATTERY_HPP
#define SYMCOH_BATTERY_HPP

#include "symcoh/gmodule.hpp"

#include <string>
#include <vector>

namespace symcoh {

struct BatteryCase {
  GModule module;
  std::string module_label;
  int max_degree = 3;
};

/// Highest degree exercised for a group: 4 when |G| <= 4, else 3.
int battery_max_degree(const FinGroup& g);

/// Group specs C1 C2 C3 C4 C5 C2xC2 S3 D4.
const std::vector<std::string>& battery_groups();
/// Module specs for the trivial coefficient groups Z, Z/2, Z/3, Z/4, Z/5.
const std::vector<std::string>& battery_module_specs();

/// C2 acting on Z by -1.
GModule c2_sign_module();

/// Every battery group with every trivial module, then the sign module.
std::vector<BatteryCase> standard_battery();

}  // namespace symcoh

#endif  // SYMCOH_BATTERY_HPP
