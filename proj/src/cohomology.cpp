#include "symcoh/cohomology.hpp"

namespace symcoh {

namespace {

template <class Map, class Make>
const typename Map::mapped_type& memo(std::recursive_mutex& mu, Map& map, int key, Make make) {
  std::lock_guard lock(mu);
  auto it = map.find(key);
  if (it == map.end()) it = map.emplace(key, make()).first;
  return it->second;
}

void require_degree(int n) {
  if (n < 0) throw InvalidArgument("degree must be non-negative");
}

}  // namespace

CochainComplex::CochainComplex(GModule module) : module_(std::move(module)) {}

const CochainSpace& CochainComplex::space(int n) const {
  require_degree(n);
  return memo(mutex_, spaces_, n, [&] { return CochainSpace(module_, n); });
}

const AbHom& CochainComplex::differential(int n) const {
  return memo(mutex_, differentials_, n, [&] {
    if (n == -1) return AbHom::zero(AbGroup(), space(0).space());
    return symcoh::differential(space(n));
  });
}

const InvariantSubspace& CochainComplex::invariants(int n) const {
  return memo(mutex_, invariants_, n, [&] { return invariant_subspace(space(n)); });
}

const AbHom& CochainComplex::restricted_differential(int n) const {
  return memo(mutex_, restricted_, n, [&] { return compose(differential(n), invariants(n).inclusion); });
}

const AbHom& CochainComplex::symmetric_differential(int n) const {
  return memo(mutex_, symmetric_differentials_, n, [&] {
    const InvariantSubspace& target = invariants(n + 1);
    if (n == -1) return AbHom::zero(AbGroup(), target.group);
    const InvariantSubspace& source = invariants(n);
    const IntMatrix images = to_dense(restricted_differential(n).matrix());
    return AbHom(source.group, target.group, target.lattice.coordinates(images));
  });
}

const Subquotient& CochainComplex::cohomology(int n) const {
  require_degree(n);
  return memo(mutex_, cohomology_, n, [&] { return homology(differential(n - 1), differential(n)); });
}

const Subquotient& CochainComplex::symmetric_cohomology(int n) const {
  require_degree(n);
  return memo(mutex_, symmetric_cohomology_, n, [&] {
    const AbHom incoming = n == 0 ? AbHom::zero(AbGroup(), invariants(0).group) : symmetric_differential(n - 1);
    return homology(incoming, restricted_differential(n));
  });
}

CohomologyResult CochainComplex::result(int n, bool symmetric) const {
  CohomologyResult r;
  r.degree = n;
  r.symmetric = symmetric;
  IntMatrix reps;
  if (symmetric) {
    const Subquotient& hs = symmetric_cohomology(n);
    r.group_value = hs.group();
    reps = to_dense(invariants(n).inclusion.matrix()) * hs.generators();
  } else {
    const Subquotient& h = cohomology(n);
    r.group_value = h.group();
    reps = h.generators();
  }
  for (Index j = 0; j < reps.cols(); ++j) r.representatives.emplace_back(space(n), reps.col(j));
  return r;
}

ComparisonResult CochainComplex::comparison(int n) const {
  const Subquotient& hs = symmetric_cohomology(n);
  const Subquotient& h = cohomology(n);
  const IntMatrix cocycles = to_dense(invariants(n).inclusion.matrix()) * hs.generators();
  AbHom map(hs.group(), h.group(), h.coordinates(cocycles));
  AbGroup k = hom_kernel(map).group;
  AbGroup i = image(map).group;
  return {std::move(map), std::move(k), std::move(i)};
}

namespace {

void require_group(const FinGroup& g, const GModule& a) {
  if (!(g == a.group())) throw InvalidArgument("the module is over a different group");
}

}  // namespace

CohomologyResult cohomology(const FinGroup& g, const GModule& a, int n) {
  require_group(g, a);
  return CochainComplex(a).result(n, false);
}

CohomologyResult symmetric_cohomology(const FinGroup& g, const GModule& a, int n) {
  require_group(g, a);
  return CochainComplex(a).result(n, true);
}

ComparisonResult comparison_map(const FinGroup& g, const GModule& a, int n) {
  require_group(g, a);
  return CochainComplex(a).comparison(n);
}

bool is_cocycle(const Cochain& c) { return differential(c.space()).apply(c.values()).isZero(); }

CoboundaryResult is_coboundary(const Cochain& c) {
  if (c.space().degree() == 0) return {c.is_zero(), std::nullopt};
  const CochainSpace prev = c.space().previous();
  auto x = solve(differential(prev), c.values());
  if (!x) return {false, std::nullopt};
  return {true, Cochain(prev, *x)};
}

std::optional<Integer> class_order(const Cochain& c, const Integer& bound) {
  for (Integer k(1); k <= bound; k += Integer(1)) {
    if (is_coboundary(Cochain(c.space(), c.values() * k)).is_coboundary) return k;
  }
  return std::nullopt;
}

}  // namespace symcoh
