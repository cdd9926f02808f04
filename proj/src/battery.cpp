#include "symcoh/battery.hpp"

namespace symcoh {

int battery_max_degree(const FinGroup& g) { return g.order() <= 4 ? 4 : 3; }

const std::vector<std::string>& battery_groups() {
  static const std::vector<std::string> groups{"C1", "C2", "C3", "C4", "C5", "C2xC2", "S3", "D4"};
  return groups;
}

const std::vector<std::string>& battery_module_specs() {
  static const std::vector<std::string> specs{"trivial:Z", "trivial:Z/2", "trivial:Z/3", "trivial:Z/4", "trivial:Z/5"};
  return specs;
}

GModule c2_sign_module() {
  return module_from_matrices(make_group("C2"), AbGroup({0}), {int_matrix({{1}}), int_matrix({{-1}})});
}

std::vector<BatteryCase> standard_battery() {
  std::vector<BatteryCase> out;
  for (const std::string& gs : battery_groups()) {
    const FinGroup g = make_group(gs);
    for (const std::string& ms : battery_module_specs()) out.push_back({parse_module_spec(g, ms), ms, battery_max_degree(g)});
  }
  GModule sign = c2_sign_module();
  const int top = battery_max_degree(sign.group());
  out.push_back({std::move(sign), "sign:Z", top});
  return out;
}

}  // namespace symcoh
