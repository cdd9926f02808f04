#include "symcoh/extension.hpp"

#include "symcoh/cohomology.hpp"

#include <array>

namespace symcoh {

ElementIndex::ElementIndex(AbGroup group) : group_(std::move(group)) {
  if (!group_.is_finite()) throw InfiniteBase("coefficient group " + group_.to_string() + " is infinite");
  const Integer cap(Guards::group_order_cap());
  Integer total(1);
  for (const Integer& d : group_.factors()) {
    total *= d;
    if (total > cap) throw ResourceGuardError("group of order above " + cap.to_string() + " cannot be enumerated");
    radix_.push_back(static_cast<int>(d.to_int64()));
  }
  size_ = static_cast<int>(total.to_int64());
}

int ElementIndex::index(const IntVector& coords) const {
  const IntVector r = group_.reduce(coords);
  int out = 0;
  for (std::size_t c = 0; c < radix_.size(); ++c) out = out * radix_[c] + static_cast<int>(r(static_cast<Index>(c)).to_int64());
  return out;
}

IntVector ElementIndex::element(int index) const {
  IntVector v(static_cast<Index>(radix_.size()));
  for (std::size_t c = radix_.size(); c-- > 0;) {
    v(static_cast<Index>(c)) = Integer(index % radix_[c]);
    index /= radix_[c];
  }
  return v;
}

namespace {

int sigma_index(const ElementIndex& elems, const Cochain& sigma, int g, int h) {
  const std::array<int, 2> t{g, h};
  return elems.index(sigma.at(t).coords());
}

}  // namespace

bool satisfies_extension_axioms(const Extension& e) {
  const FinGroup& x = e.X;
  const FinGroup& g = e.A.group();
  const ElementIndex elems(e.A.base());
  if (x.order() != elems.size() * g.order()) return false;
  if (static_cast<int>(e.i.size()) != elems.size() || static_cast<int>(e.pi.size()) != x.order()) return false;
  for (int a = 0; a < x.order(); ++a) {
    for (int b = 0; b < x.order(); ++b) {
      if (e.pi[static_cast<std::size_t>(x.mul(a, b))] != g.mul(e.pi[static_cast<std::size_t>(a)], e.pi[static_cast<std::size_t>(b)])) {
        return false;
      }
    }
  }
  std::vector<int> kernel_hits(static_cast<std::size_t>(x.order()), 0);
  for (int a = 0; a < elems.size(); ++a) {
    const int ia = e.i[static_cast<std::size_t>(a)];
    if (e.pi[static_cast<std::size_t>(ia)] != FinGroup::identity() || kernel_hits[static_cast<std::size_t>(ia)]++) return false;
    for (int b = 0; b < elems.size(); ++b) {
      const int sum = elems.index(elems.element(a) + elems.element(b));
      if (x.mul(ia, e.i[static_cast<std::size_t>(b)]) != e.i[static_cast<std::size_t>(sum)]) return false;
    }
  }
  // |ker pi| = |A| and |X| = |A||G| make pi surjective.
  for (int y = 0; y < x.order(); ++y) {
    const int gy = e.pi[static_cast<std::size_t>(y)];
    for (int a = 0; a < elems.size(); ++a) {
      const int conj = x.mul(x.mul(y, e.i[static_cast<std::size_t>(a)]), x.inv(y));
      const int moved = elems.index(act(e.A, gy, AbElement(e.A.base(), elems.element(a))).coords());
      if (conj != e.i[static_cast<std::size_t>(moved)]) return false;
    }
  }
  return true;
}

Section::Section(Extension extension, std::vector<int> t) : extension_(std::move(extension)), t_(std::move(t)) {
  const int order = extension_.A.group().order();
  if (static_cast<int>(t_.size()) != order) throw InvalidArgument("section needs one value per group element");
  for (int g = 0; g < order; ++g) {
    const int x = t_[static_cast<std::size_t>(g)];
    if (x < 0 || x >= extension_.X.order() || extension_.pi[static_cast<std::size_t>(x)] != g) {
      throw InvalidArgument("section value at " + std::to_string(g) + " is not in the fibre");
    }
  }
}

Extension extension_from_cocycle(const Cochain& sigma) {
  const CochainSpace& space = sigma.space();
  const GModule& m = space.module();
  const ElementIndex elems(m.base());
  if (space.degree() != 2) throw InvalidArgument("extensions need a 2-cochain");
  if (!is_cocycle(sigma)) throw NotACocycle("sigma is not a 2-cocycle");
  const FinGroup& g = m.group();
  const int na = elems.size();
  const int ng = g.order();
  if (static_cast<std::uint64_t>(na) * static_cast<std::uint64_t>(ng) > Guards::group_order_cap()) {
    throw ResourceGuardError("extension of order " + std::to_string(na * ng) + " exceeds the group order cap");
  }

  std::vector<int> add(static_cast<std::size_t>(na * na));
  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < na; ++b) add[static_cast<std::size_t>(a * na + b)] = elems.index(elems.element(a) + elems.element(b));
  }
  std::vector<int> moved(static_cast<std::size_t>(ng * na));
  for (int h = 0; h < ng; ++h) {
    for (int a = 0; a < na; ++a) {
      moved[static_cast<std::size_t>(h * na + a)] = elems.index(act(m, h, AbElement(m.base(), elems.element(a))).coords());
    }
  }
  // Stored coordinate u = a + s(e,e).  Then (u,g)(v,h) has stored
  // coordinate u + g v + [s(g,h) - g s(e,e)].
  const int see = sigma_index(elems, sigma, 0, 0);
  const int neg_see = elems.index(-elems.element(see));
  std::vector<int> shift(static_cast<std::size_t>(ng * ng));
  for (int a = 0; a < ng; ++a) {
    for (int b = 0; b < ng; ++b) {
      shift[static_cast<std::size_t>(a * ng + b)] =
          add[static_cast<std::size_t>(sigma_index(elems, sigma, a, b) * na + moved[static_cast<std::size_t>(a * na + neg_see)])];
    }
  }
  const int nx = na * ng;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(nx), std::vector<int>(static_cast<std::size_t>(nx)));
  for (int x = 0; x < nx; ++x) {
    const int u = x / ng, a = x % ng;
    for (int y = 0; y < nx; ++y) {
      const int v = y / ng, b = y % ng;
      const int w = add[static_cast<std::size_t>(add[static_cast<std::size_t>(u * na + moved[static_cast<std::size_t>(a * na + v)])] * na +
                                                  shift[static_cast<std::size_t>(a * ng + b)])];
      table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = w * ng + g.mul(a, b);
    }
  }
  Extension e{FinGroup(std::move(table), "X(" + g.label() + "," + m.base().to_string() + ")"), m, {}, {}};
  e.i.resize(static_cast<std::size_t>(na));
  for (int a = 0; a < na; ++a) e.i[static_cast<std::size_t>(a)] = a * ng;
  e.pi.resize(static_cast<std::size_t>(nx));
  for (int x = 0; x < nx; ++x) e.pi[static_cast<std::size_t>(x)] = x % ng;
  return e;
}

Cochain cocycle_from_section(const Section& t) {
  const Extension& e = t.extension();
  const ElementIndex elems(e.A.base());
  std::vector<int> kernel(static_cast<std::size_t>(e.X.order()), -1);
  for (int a = 0; a < elems.size(); ++a) kernel[static_cast<std::size_t>(e.i[static_cast<std::size_t>(a)])] = a;
  const FinGroup& g = e.A.group();
  return Cochain::from_function(CochainSpace(e.A, 2), [&](std::span<const int> gh) {
    const int x = e.X.mul(e.X.mul(t(gh[0]), t(gh[1])), e.X.inv(t(g.mul(gh[0], gh[1]))));
    return elems.element(kernel[static_cast<std::size_t>(x)]);
  });
}

bool is_symmetric_section(const Section& t) {
  const FinGroup& g = t.extension().A.group();
  for (int a = 0; a < g.order(); ++a) {
    if (t(g.inv(a)) != t.extension().X.inv(t(a))) return false;
  }
  return true;
}

std::pair<bool, std::optional<Section>> has_symmetric_section(const Extension& e) {
  const FinGroup& g = e.A.group();
  const std::uint64_t fibre = static_cast<std::uint64_t>(e.X.order() / g.order());
  if (checked_power(fibre, static_cast<unsigned>(g.order())) > Guards::enumeration_cap()) {
    throw EnumerationGuardError("section search over " + std::to_string(fibre) + "^" + std::to_string(g.order()) +
                                " candidates exceeds the enumeration cap");
  }
  // The condition only couples g with g^-1, so the search splits into
  // independent choices per inverse pair.
  std::vector<std::vector<int>> fibres(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < e.X.order(); ++x) fibres[static_cast<std::size_t>(e.pi[static_cast<std::size_t>(x)])].push_back(x);
  std::vector<int> t(static_cast<std::size_t>(g.order()), -1);
  for (int a = 0; a < g.order(); ++a) {
    const int b = g.inv(a);
    if (b < a) continue;
    for (int x : fibres[static_cast<std::size_t>(a)]) {
      if (a == b && e.X.inv(x) != x) continue;
      t[static_cast<std::size_t>(a)] = x;
      t[static_cast<std::size_t>(b)] = e.X.inv(x);
      break;
    }
    if (t[static_cast<std::size_t>(a)] < 0) return {false, std::nullopt};
  }
  return {true, Section(e, std::move(t))};
}

bool is_symmetric_cocycle(const Cochain& sigma) {
  const CochainSpace& space = sigma.space();
  if (space.degree() != 2) throw InvalidArgument("symmetry conditions are stated for 2-cochains");
  const FinGroup& g = space.group();
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      const AbElement v = sigma.at(std::array<int, 2>{a, b});
      if (!(v == -act(space.module(), a, sigma.at(std::array<int, 2>{g.inv(a), g.mul(a, b)})))) return false;
      if (!(v == -sigma.at(std::array<int, 2>{g.mul(a, b), g.inv(b)}))) return false;
    }
  }
  return true;
}

ExtensionReport extension_report(const GModule& a) {
  if (!a.base().is_finite()) throw InfiniteBase("extension enumeration needs a finite coefficient group");
  const CochainComplex cx(a);
  const Subquotient& h2 = cx.cohomology(2);
  const ComparisonResult cmp = cx.comparison(2);
  const ElementIndex classes(h2.group());
  if (static_cast<std::uint64_t>(classes.size()) > Guards::enumeration_cap()) {
    throw EnumerationGuardError("too many cohomology classes to enumerate");
  }
  const CochainSpace& space = cx.space(2);
  ExtensionReport report{h2.group(), {}};
  for (int c = 0; c < classes.size(); ++c) {
    const IntVector z = classes.element(c);
    const Cochain cocycle(space, space.space().reduce(h2.generators() * z));
    auto [symmetric, witness] = has_symmetric_section(extension_from_cocycle(cocycle));
    ExtensionClass entry{z, witness ? cocycle_from_section(*witness) : cocycle, false, false, witness};
    entry.symmetric_cocycle = is_symmetric_cocycle(entry.representative);
    entry.in_symmetric_image = solve(cmp.map, z).has_value();
    report.classes.push_back(std::move(entry));
  }
  return report;
}

}  // namespace symcoh
