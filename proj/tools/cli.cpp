#include "cli.hpp"

#include "symcoh/battery.hpp"
#include "symcoh/homogeneous.hpp"
#include "symcoh/json_io.hpp"
#include "symcoh/symop.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

namespace symcoh::cli {

namespace {

struct Options {
  std::string group;
  std::string module;
  int degree = 0;
  bool symmetric = false;
  bool compare = false;
  bool json = false;
  bool representatives = false;
  std::string suite;
  std::optional<int> max_degree;
  bool corrupt = false;
  bool verbose = false;
  std::optional<std::uint64_t> entry_cap;
  std::optional<std::uint64_t> enumeration_cap;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Module specs ending in .json name a file with {base, matrices}.
GModule load_module(const FinGroup& g, const std::string& spec) {
  if (!ends_with(spec, ".json")) return parse_module_spec(g, spec);
  std::ifstream in(spec);
  if (!in) throw ParseError("cannot open module file '" + spec + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("module file '" + spec + "': " + e.what());
  }
  return module_from_json(g, j);
}

std::string join(const IntVector& v) {
  std::string s = "[";
  for (Index i = 0; i < v.size(); ++i) s += (i ? " " : "") + v(i).to_string();
  return s + "]";
}

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s + "]";
}

int cmd_cohomology(const Options& o, std::ostream& out) {
  const FinGroup g = make_group(o.group);
  const GModule m = load_module(g, o.module);
  if (o.degree < 0) throw InvalidArgument("degree must be non-negative");
  const CochainComplex cx(m);
  const CohomologyResult r = cx.result(o.degree, o.symmetric);
  std::optional<ComparisonResult> cmp;
  if (o.compare) cmp = cx.comparison(o.degree);
  if (o.json) {
    Json j{{"group_spec", o.group}, {"module_spec", o.module}, {"cohomology", to_json(r, o.representatives)}};
    if (cmp) {
      j["comparison"] = to_json(*cmp);
      j["comparison"]["source"] = to_json(cx.result(o.degree, true).group_value);
      j["comparison"]["target"] = to_json(cx.result(o.degree, false).group_value);
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << r.group_value.to_string() << "\n";
  if (o.representatives) {
    for (const Cochain& c : r.representatives) out << "representative " << join(c.values()) << "\n";
  }
  if (cmp) {
    out << "comparison HS^" << o.degree << " -> H^" << o.degree << ": kernel " << cmp->kernel.to_string() << ", image "
        << cmp->image.to_string() << " in " << cmp->map.target().to_string() << "\n";
  }
  return kOk;
}

struct Case {
  std::string group_label;
  std::string module_label;
  GModule module;
  int top;
};

std::vector<Case> verify_cases(const Options& o) {
  std::vector<Case> cases;
  const auto top_for = [&](const FinGroup& g) { return o.max_degree ? *o.max_degree : battery_max_degree(g); };
  if (o.group.empty() && o.module.empty()) {
    for (BatteryCase& b : standard_battery()) {
      const FinGroup& g = b.module.group();
      cases.push_back({g.label(), b.module_label, b.module, top_for(g)});
    }
    return cases;
  }
  std::vector<std::string> groups = o.group.empty() ? battery_groups() : std::vector<std::string>{o.group};
  for (const std::string& gs : groups) {
    const FinGroup g = make_group(gs);
    if (!o.module.empty()) {
      cases.push_back({gs, o.module, load_module(g, o.module), top_for(g)});
      continue;
    }
    for (const std::string& ms : battery_module_specs()) cases.push_back({gs, ms, parse_module_spec(g, ms), top_for(g)});
  }
  return cases;
}

VerificationReport run_suite(const std::string& suite, const GModule& m, int n, ActionVariant variant) {
  const CochainSpace space(m, n);
  if (suite == "actions") return verify_actions(space, variant);
  if (suite == "relations") return verify_exchange_relations(space, variant);
  if (suite == "norm") return norm_identity_report(space, variant);
  VerificationReport r = verify_remark(space);
  r.add("alt cohomology = H^n", n, {}, alt_cohomology(m, n) == CochainComplex(m).cohomology(n).group());
  return r;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.max_degree && *o.max_degree < 0) throw InvalidArgument("max degree must be non-negative");
  if (o.corrupt && o.suite == "homogeneous") throw InvalidArgument("--corrupt applies to the actions, relations and norm suites");
  const ActionVariant variant = o.corrupt ? ActionVariant::sign_flipped : ActionVariant::standard;
  Json cases_json = Json::array();
  std::size_t total = 0, failed = 0;
  for (const Case& c : verify_cases(o)) {
    VerificationReport report;
    for (int n = 0; n <= c.top; ++n) report.append(run_suite(o.suite, c.module, n, variant));
    total += report.checks.size();
    const std::vector<IdentityCheck> fails = report.failures();
    failed += fails.size();
    if (o.json) {
      Json j = to_json(report);
      j["group"] = c.group_label;
      j["module"] = c.module_label;
      cases_json.push_back(j);
      continue;
    }
    out << c.group_label << " " << c.module_label << " n=0.." << c.top << ": " << report.checks.size() << " checks, "
        << (fails.empty() ? "ok" : std::to_string(fails.size()) + " failed") << "\n";
    for (const IdentityCheck& ic : report.checks) {
      if (o.verbose || !ic.holds) out << "  " << describe(ic) << "\n";
    }
  }
  if (o.json) {
    out << Json{{"suite", o.suite}, {"checks", total}, {"failures", failed}, {"cases", cases_json}}.dump(2) << "\n";
  } else {
    out << "suite " << o.suite << ": " << (failed ? "FAIL" : "PASS") << " (" << total - failed << "/" << total << " checks hold)\n";
  }
  return failed ? kVerificationFailed : kOk;
}

int cmd_extensions(const Options& o, std::ostream& out) {
  const FinGroup g = make_group(o.group);
  const GModule m = load_module(g, o.module);
  const ExtensionReport r = extension_report(m);
  if (o.json) {
    Json j = to_json(r);
    j["group_spec"] = o.group;
    j["module_spec"] = o.module;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "H^2 = " << r.h2.to_string() << ", " << r.classes.size() << (r.classes.size() == 1 ? " class\n" : " classes\n");
  for (const ExtensionClass& c : r.classes) {
    out << "class " << join(c.coordinates) << ": representative " << join(c.representative.values())
        << "; symmetric cocycle: " << (c.symmetric_cocycle ? "yes" : "no")
        << "; in HS^2 image: " << (c.in_symmetric_image ? "yes" : "no")
        << "; symmetric section: " << (c.witness ? join(c.witness->t()) : std::string("none")) << "\n";
  }
  return kOk;
}

std::optional<std::uint64_t> env_entry_cap() {
  const char* v = std::getenv("SYMCOH_GUARD_ENTRIES");
  if (!v || !*v) return std::nullopt;
  const auto parsed = Integer::parse(v);
  if (!parsed || parsed->sign() <= 0 || !parsed->fits_int64()) throw ParseError(std::string("SYMCOH_GUARD_ENTRIES: bad value '") + v + "'");
  return static_cast<std::uint64_t>(parsed->to_int64());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Ordinary and symmetric cohomology of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--entry-cap", o.entry_cap, "Matrix entry cap (overrides SYMCOH_GUARD_ENTRIES)");
  app.add_option("--enumeration-cap", o.enumeration_cap, "Cap on exhaustive enumerations");

  CLI::App* coh = app.add_subcommand("cohomology", "H^n or HS^n of one group and module");
  coh->add_option("--group", o.group, "Group spec, e.g. C4, S3, C2xC2")->required();
  coh->add_option("--module", o.module, "trivial:Z, trivial:Z/m, trivial:Z^r, sums with +, or a .json file")->required();
  coh->add_option("--degree", o.degree, "Degree n")->required();
  coh->add_flag("--symmetric", o.symmetric, "Symmetric cohomology HS^n");
  coh->add_flag("--compare", o.compare, "Also report the map HS^n -> H^n");
  coh->add_flag("--representatives", o.representatives, "List a cocycle per invariant factor");
  coh->add_flag("--json", o.json, "JSON output");

  CLI::App* ver = app.add_subcommand("verify", "Check operator identities over a battery");
  ver->add_option("--suite", o.suite, "actions | relations | norm | homogeneous")
      ->required()
      ->check(CLI::IsMember({"actions", "relations", "norm", "homogeneous"}));
  ver->add_option("--group", o.group, "Restrict to one group (default: the standard battery)");
  ver->add_option("--module", o.module, "Restrict to one module");
  ver->add_option("--max-degree", o.max_degree, "Highest source degree (default 4 for |G| <= 4, else 3)");
  ver->add_flag("--corrupt", o.corrupt, "Negate every transposition operator (negative control)");
  ver->add_flag("--verbose", o.verbose, "List every check");
  ver->add_flag("--json", o.json, "JSON output");

  CLI::App* ext = app.add_subcommand("extensions", "Classes of H^2 and their symmetric sections");
  ext->add_option("--group", o.group, "Group spec")->required();
  ext->add_option("--module", o.module, "Finite module spec")->required();
  ext->add_flag("--json", o.json, "JSON output");

  std::vector<std::string> argv_storage{"symcoh"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  ScopedGuards restore;
  try {
    if (auto cap = env_entry_cap()) Guards::set_entry_cap(*cap);
    if (o.entry_cap) Guards::set_entry_cap(*o.entry_cap);
    if (o.enumeration_cap) Guards::set_enumeration_cap(*o.enumeration_cap);
    if (coh->parsed()) return cmd_cohomology(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    return cmd_extensions(o, out);
  } catch (const ResourceGuardError& e) {
    err << "resource guard: " << e.what() << "\n";
    return kGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace symcoh::cli
