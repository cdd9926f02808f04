#include "symcoh/homogeneous.hpp"

#include "block_builder.hpp"

namespace symcoh {

using detail::BlockBuilder;

namespace {

AbHom substitution(const CochainSpace& space, bool partial_products) {
  const FinGroup& g = space.group();
  BlockBuilder b(space, space);
  std::vector<int> src(static_cast<std::size_t>(space.degree()));
  for_each_tuple(g.order(), space.degree(), [&](std::uint64_t rank, const std::vector<int>& t) {
    for (std::size_t p = 0; p < t.size(); ++p) {
      if (p == 0) {
        src[p] = t[p];
      } else if (partial_products) {
        src[p] = g.mul(src[p - 1], t[p]);
      } else {
        src[p] = g.mul(g.inv(t[p - 1]), t[p]);
      }
    }
    b.add(rank, space.tuple_rank(src), -1, 1);
  });
  return b.build();
}

}  // namespace

AbHom alt_differential(const CochainSpace& space) {
  const FinGroup& g = space.group();
  const int n = space.degree();
  const CochainSpace target = space.next();
  BlockBuilder b(space, target);
  std::vector<int> src(static_cast<std::size_t>(n));
  for_each_tuple(g.order(), n + 1, [&](std::uint64_t rank, const std::vector<int>& t) {
    const int g0_inv = g.inv(t[0]);
    for (int p = 0; p < n; ++p) src[static_cast<std::size_t>(p)] = g.mul(g0_inv, t[static_cast<std::size_t>(p + 1)]);
    b.add(rank, space.tuple_rank(src), t[0], 1);
    for (int j = 1; j <= n + 1; ++j) {
      for (int p = 0, q = 0; p <= n; ++p) {
        if (p != j - 1) src[static_cast<std::size_t>(q++)] = t[static_cast<std::size_t>(p)];
      }
      b.add(rank, space.tuple_rank(src), -1, j % 2 ? -1 : 1);
    }
  });
  return b.build();
}

AbHom j_map(const CochainSpace& space) { return substitution(space, false); }

AbHom partial_products_map(const CochainSpace& space) { return substitution(space, true); }

AbHom alt_transposition_action(const CochainSpace& space, int i) {
  const int n = space.degree();
  if (i < 1 || i > n) throw InvalidArgument("transposition index out of range");
  const FinGroup& g = space.group();
  BlockBuilder b(space, space);
  std::vector<int> src(static_cast<std::size_t>(n));
  for_each_tuple(g.order(), n, [&](std::uint64_t rank, const std::vector<int>& t) {
    src = t;
    int act = -1;
    if (i == 1) {
      act = t[0];
      const int inv = g.inv(t[0]);
      src[0] = inv;
      for (int p = 1; p < n; ++p) src[static_cast<std::size_t>(p)] = g.mul(inv, t[static_cast<std::size_t>(p)]);
    } else {
      std::swap(src[static_cast<std::size_t>(i - 2)], src[static_cast<std::size_t>(i - 1)]);
    }
    b.add(rank, space.tuple_rank(src), act, -1);
  });
  return b.build();
}

VerificationReport verify_remark(const CochainSpace& space) {
  VerificationReport r;
  const int n = space.degree();
  const CochainSpace next = space.next();
  const AbHom j = j_map(space);
  const AbHom alt_d = alt_differential(space);
  r.add("j d = d~ j", n, {}, compose(j_map(next), differential(space)) == compose(alt_d, j));
  const AbHom p = partial_products_map(space);
  const AbHom id = AbHom::identity(space.space());
  r.add("j invertible", n, {}, compose(j, p) == id && compose(p, j) == id);
  r.add("d~ d~ = 0", n, {}, compose(alt_differential(next), alt_d).is_zero());
  for (int i = 1; i <= n; ++i) {
    const AbHom alt = alt_transposition_action(space, i);
    r.add("alt involution", n, {i}, compose(alt, alt) == id);
    r.add("j tau = tau~ j", n, {i}, compose(j, transposition_action(space, i)) == compose(alt, j), false);
  }
  return r;
}

AbGroup alt_cohomology(const GModule& module, int n) {
  const CochainSpace here(module, n);
  const AbHom out = alt_differential(here);
  if (n == 0) return homology(AbHom::zero(AbGroup(), here.space()), out).group();
  return homology(alt_differential(here.previous()), out).group();
}

}  // namespace symcoh
