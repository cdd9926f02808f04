#include "symcoh/symop.hpp"

#include <algorithm>
#include <numeric>

namespace symcoh {

namespace {

std::vector<AbHom> all_transpositions(const CochainSpace& space, ActionVariant variant) {
  std::vector<AbHom> out;
  for (int i = 1; i <= space.degree(); ++i) out.push_back(transposition_action(space, i, variant));
  return out;
}

const AbHom& tau(const std::vector<AbHom>& taus, int i) { return taus[static_cast<std::size_t>(i - 1)]; }

// Maps C^n into (C^n)^m by stacking the given endomorphisms.
AbHom stack(const CochainSpace& space, const std::vector<AbHom>& parts) {
  const Index dim = space.dimension();
  std::vector<IntTriplet> triplets;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const SparseIntMatrix& m = parts[p].matrix();
    for (Index r = 0; r < m.outerSize(); ++r) {
      for (SparseIntMatrix::InnerIterator it(m, r); it; ++it) {
        triplets.emplace_back(static_cast<Index>(p) * dim + it.row(), it.col(), it.value());
      }
    }
  }
  SparseIntMatrix out(dim * static_cast<Index>(parts.size()), dim);
  out.setFromTriplets(triplets.begin(), triplets.end());
  return AbHom(space.space(), space.space().repeat(parts.size()), std::move(out));
}

void check_window(const CochainSpace& space, int first, int last) {
  if (first < 1 || first > last || last > space.degree() + 1) {
    throw InvalidArgument("symbol window [" + std::to_string(first) + "," + std::to_string(last) + "] outside 1.." +
                          std::to_string(space.degree() + 1));
  }
}

}  // namespace

AbHom transposition_action(const CochainSpace& space, int i, ActionVariant variant) {
  AbHom t = transposition_action(space, i);
  return variant == ActionVariant::sign_flipped ? -t : t;
}

AbHom permutation_action(const CochainSpace& space, const std::vector<int>& perm, ActionVariant variant) {
  const int symbols = space.degree() + 1;
  std::vector<int> p = perm;
  std::vector<int> sorted(p);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ident(static_cast<std::size_t>(symbols));
  std::iota(ident.begin(), ident.end(), 1);
  if (sorted != ident) throw InvalidArgument("not a permutation of 1.." + std::to_string(symbols));

  const std::vector<AbHom> taus = all_transpositions(space, variant);
  AbHom suffix = AbHom::identity(space.space());
  // p = p' s_i at a descent i, so act(p) = act(p') tau_i.
  while (true) {
    int i = 1;
    while (i < symbols && p[static_cast<std::size_t>(i - 1)] < p[static_cast<std::size_t>(i)]) ++i;
    if (i == symbols) break;
    std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
    suffix = compose(tau(taus, i), suffix);
  }
  return suffix;
}

NormOperator norm_operator(const CochainSpace& space, int first, int last, ActionVariant variant) {
  check_window(space, first, last);
  const std::vector<AbHom> taus = all_transpositions(space, variant);
  const AbHom id = AbHom::identity(space.space());
  AbHom result = id;
  for (int k = last - 1; k >= first; --k) {
    AbHom chain = id;
    AbHom cosets = id;
    for (int m = k; m < last; ++m) {
      chain = compose(tau(taus, m), chain);
      cosets = cosets + chain;
    }
    result = compose(cosets, result);
  }
  return {space.degree(), first, last, result};
}

NormOperator norm_operator(const CochainSpace& space, ActionVariant variant) {
  return norm_operator(space, 1, space.degree() + 1, variant);
}

AbHom norm_operator_by_enumeration(const CochainSpace& space, int first, int last, ActionVariant variant) {
  check_window(space, first, last);
  if (factorial(static_cast<unsigned>(last - first + 1)) > Integer(Guards::enumeration_cap())) {
    throw EnumerationGuardError("norm enumeration over " + std::to_string(last - first + 1) + " symbols");
  }
  std::vector<int> window(static_cast<std::size_t>(last - first + 1));
  std::iota(window.begin(), window.end(), first);
  std::vector<int> perm(static_cast<std::size_t>(space.degree() + 1));
  AbHom sum = AbHom::zero(space.space(), space.space());
  do {
    std::iota(perm.begin(), perm.end(), 1);
    std::copy(window.begin(), window.end(), perm.begin() + (first - 1));
    sum = sum + permutation_action(space, perm, variant);
  } while (std::next_permutation(window.begin(), window.end()));
  return sum;
}

VerificationReport verify_actions(const CochainSpace& space, ActionVariant variant) {
  VerificationReport r;
  const int n = space.degree();
  const std::vector<AbHom> taus = all_transpositions(space, variant);
  const AbHom id = AbHom::identity(space.space());
  for (int i = 1; i <= n; ++i) r.add("involution", n, {i}, compose(tau(taus, i), tau(taus, i)) == id);
  for (int i = 1; i + 1 <= n; ++i) {
    const AbHom& a = tau(taus, i);
    const AbHom& b = tau(taus, i + 1);
    r.add("braid", n, {i, i + 1}, compose(a, compose(b, a)) == compose(b, compose(a, b)));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      r.add("commutation", n, {i, j}, compose(tau(taus, i), tau(taus, j)) == compose(tau(taus, j), tau(taus, i)));
    }
  }
  const CochainSpace next = space.next();
  const AbHom d = differential(space);
  r.add("dd=0", n, {}, compose(differential(next), d).is_zero());

  // Invariants of this variant's action, then their image under d.
  AbHom inclusion = id;
  if (n > 0) {
    std::vector<AbHom> fixes;
    for (const AbHom& t : taus) fixes.push_back(t - id);
    inclusion = hom_kernel(stack(space, fixes)).inclusion;
  }
  const AbHom image = compose(d, inclusion);
  for (int i = 1; i <= n + 1; ++i) {
    const AbHom t = transposition_action(next, i, variant);
    r.add("closure", n, {i}, compose(t, image) == image);
  }
  return r;
}

VerificationReport verify_exchange_relations(const CochainSpace& space, ActionVariant variant) {
  VerificationReport r;
  const int n = space.degree();
  const CochainSpace next = space.next();
  const std::vector<AbHom> low = all_transpositions(space, variant);
  const std::vector<AbHom> high = all_transpositions(next, variant);
  std::vector<AbHom> faces;
  for (int j = 0; j <= n + 1; ++j) faces.push_back(face_map(space, j));
  const auto face = [&](int j) -> const AbHom& { return faces[static_cast<std::size_t>(j)]; };

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n + 1; ++j) {
      r.add("tau_i d^j = d^j tau_i (i<j)", n, {i, j}, compose(tau(high, i), face(j)) == compose(face(j), tau(low, i)));
    }
  }
  for (int i = 2; i <= n + 1; ++i) {
    for (int j = 0; j + 2 <= i; ++j) {
      r.add("tau_i d^j = d^j tau_(i-1) (j+2<=i)", n, {i, j},
            compose(tau(high, i), face(j)) == compose(face(j), tau(low, i - 1)));
    }
  }
  for (int i = 1; i <= n + 1; ++i) {
    r.add("tau_i d^(i-1) = -d^i", n, {i}, compose(tau(high, i), face(i - 1)) == -face(i));
  }
  for (int i = 1; i <= n + 1; ++i) {
    r.add("tau_i d^i = -d^(i-1)", n, {i}, compose(tau(high, i), face(i)) == -face(i - 1));
  }
  return r;
}

VerificationReport norm_identity_report(const CochainSpace& space, ActionVariant variant) {
  VerificationReport r;
  const int n = space.degree();
  const CochainSpace next = space.next();
  const AbHom low = norm_operator(space, variant).matrix;
  const AbHom high = norm_operator(next, variant).matrix;
  const AbHom d = differential(space);
  const AbHom d_low = compose(d, low);
  const AbHom high_d0 = compose(high, face_map(space, 0));
  r.add("(n+2) d S = S d", n, {}, Integer(n + 2) * d_low == compose(high, d));
  r.add("d S = S d^0", n, {}, d_low == high_d0);
  for (int j = 1; j <= n + 1; ++j) {
    const AbHom lhs = compose(high, face_map(space, j));
    r.add("S d^j = (-1)^j S d^0", n, {j}, lhs == (j % 2 ? -high_d0 : high_d0));
  }
  return r;
}

bool verify_norm_identity(const CochainSpace& space) { return norm_identity_report(space).all_hold(); }

bool injectivity_predicate(const GModule& a, int n) {
  if (n < 0) throw InvalidArgument("degree must be non-negative");
  const Integer next(n + 1);
  const Integer fact = factorial(static_cast<unsigned>(n));
  for (const Integer& d : a.base().canonical().factors()) {
    if (d.is_zero()) {
      if (!(fact == Integer(1))) return false;
    } else if (!(gcd(next, d) == Integer(1)) || !(gcd(fact, d) == Integer(1))) {
      return false;
    }
  }
  return true;
}

}  // namespace symcoh
