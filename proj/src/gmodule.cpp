#include "symcoh/gmodule.hpp"

#include <charconv>
#include <string>

namespace symcoh {

namespace {

bool is_automorphism(const AbHom& h) { return hom_kernel(h).group.is_trivial() && cokernel(h).group.is_trivial(); }

}  // namespace

GModule::GModule(FinGroup group, AbGroup base, std::vector<AbHom> action)
    : group_(std::move(group)), base_(std::move(base)), action_(std::move(action)) {
  if (static_cast<int>(action_.size()) != group_.order()) {
    throw InvalidArgument("GModule: expected " + std::to_string(group_.order()) + " action matrices, got " +
                          std::to_string(action_.size()));
  }
  const AbHom id = AbHom::identity(base_);
  trivial_ = true;
  for (int g = 0; g < group_.order(); ++g) {
    const AbHom& a = this->action(g);
    if (!(a.source() == base_) || !(a.target() == base_)) throw InvalidArgument("GModule: action is not an endomorphism of the base");
    if (!is_automorphism(a)) throw NotInvertible("GModule: action of element " + std::to_string(g) + " is not invertible");
    trivial_ = trivial_ && a == id;
  }
  if (!(this->action(0) == id)) throw NotAHomomorphism("GModule: the identity does not act trivially");
  for (int g = 0; g < group_.order(); ++g) {
    for (int h = 0; h < group_.order(); ++h) {
      if (!(compose(this->action(g), this->action(h)) == this->action(group_.mul(g, h)))) {
        throw NotAHomomorphism("GModule: action(" + std::to_string(g) + ") o action(" + std::to_string(h) +
                               ") != action(" + std::to_string(group_.mul(g, h)) + ")");
      }
    }
  }
}

GModule trivial_module(const FinGroup& g, const AbGroup& a) {
  return GModule(g, a, std::vector<AbHom>(static_cast<std::size_t>(g.order()), AbHom::identity(a)));
}

GModule module_from_matrices(const FinGroup& g, const AbGroup& a, const std::vector<IntMatrix>& mats) {
  if (static_cast<int>(mats.size()) != g.order()) {
    throw InvalidArgument("module_from_matrices: expected " + std::to_string(g.order()) + " matrices, got " +
                          std::to_string(mats.size()));
  }
  std::vector<AbHom> action;
  action.reserve(mats.size());
  for (const auto& m : mats) action.emplace_back(a, a, m);
  return GModule(g, a, std::move(action));
}

AbElement act(const GModule& m, int g, const AbElement& a) { return m.action(g)(a); }

namespace {

Integer parse_positive(std::string_view text, std::string_view what) {
  auto v = Integer::parse(text);
  if (!v || v->sign() <= 0 || text.front() == '+' || text.front() == '-') {
    throw ParseError("module spec: bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return *v;
}

}  // namespace

GModule parse_module_spec(const FinGroup& g, std::string_view spec) {
  constexpr std::string_view prefix = "trivial:";
  std::vector<Integer> moduli;
  std::size_t start = 0;
  bool first = true;
  while (true) {
    const std::size_t plus = spec.find('+', start);
    std::string_view term = spec.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    if (term.substr(0, prefix.size()) == prefix) {
      term.remove_prefix(prefix.size());
    } else if (first) {
      throw ParseError("module spec must start with 'trivial:' (non-trivial actions are read from JSON files)");
    }
    first = false;
    if (term == "Z") {
      moduli.emplace_back(0);
    } else if (term.substr(0, 2) == "Z/") {
      moduli.push_back(parse_positive(term.substr(2), "modulus"));
    } else if (term.substr(0, 2) == "Z^") {
      const Integer r = parse_positive(term.substr(2), "rank");
      if (r > Integer(static_cast<long long>(Guards::entry_cap()))) throw ResourceGuardError("module spec: rank too large");
      moduli.insert(moduli.end(), static_cast<std::size_t>(r.to_int64()), Integer(0));
    } else {
      throw ParseError("module spec: cannot parse term '" + std::string(term) + "'");
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return trivial_module(g, AbGroup::diagonal(std::move(moduli)).canonical());
}

}  // namespace symcoh
