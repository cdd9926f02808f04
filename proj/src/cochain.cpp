#include "symcoh/cochain.hpp"

#include "block_builder.hpp"

namespace symcoh {

using detail::BlockBuilder;

namespace {

std::uint64_t count_tuples(int order, int degree) {
  if (degree < 0) throw InvalidArgument("cochain degree must be non-negative");
  return checked_power(static_cast<std::uint64_t>(order), static_cast<unsigned>(degree));
}

void add_face(BlockBuilder& b, const CochainSpace& s, int j, int sign) {
  const FinGroup& g = s.group();
  const int n = s.degree();
  std::vector<int> src(static_cast<std::size_t>(n));
  for_each_tuple(g.order(), n + 1, [&](std::uint64_t rank, const std::vector<int>& t) {
    int act = -1;
    if (j == 0) {
      act = t[0];
      std::copy(t.begin() + 1, t.end(), src.begin());
    } else if (j <= n) {
      for (int p = 0, q = 0; p <= n; ++p) {
        if (p == j - 1) {
          src[static_cast<std::size_t>(q++)] = g.mul(t[static_cast<std::size_t>(p)], t[static_cast<std::size_t>(p + 1)]);
          ++p;
        } else {
          src[static_cast<std::size_t>(q++)] = t[static_cast<std::size_t>(p)];
        }
      }
    } else {
      std::copy(t.begin(), t.end() - 1, src.begin());
    }
    b.add(rank, s.tuple_rank(src), act, sign);
  });
}

}  // namespace

void for_each_tuple(int group_order, int length, const std::function<void(std::uint64_t, const std::vector<int>&)>& f) {
  std::vector<int> t(static_cast<std::size_t>(length), 0);
  std::uint64_t rank = 0;
  while (true) {
    f(rank++, t);
    int p = length - 1;
    while (p >= 0 && ++t[static_cast<std::size_t>(p)] == group_order) t[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) return;
  }
}

CochainSpace::CochainSpace(GModule module, int degree)
    : module_(std::move(module)), degree_(degree), tuples_(count_tuples(module_.group().order(), degree)) {
  Guards::check_entries(tuples_, static_cast<std::uint64_t>(module_.rank()), "cochain space C^" + std::to_string(degree));
  space_ = module_.base().repeat(tuples_);
}

CochainSpace CochainSpace::previous() const {
  if (degree_ == 0) throw InvalidArgument("C^0 has no predecessor");
  return CochainSpace(module_, degree_ - 1);
}

std::uint64_t CochainSpace::tuple_rank(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != degree_) throw InvalidArgument("tuple length does not match the degree");
  std::uint64_t r = 0;
  const auto n = static_cast<std::uint64_t>(group().order());
  for (int x : tuple) r = r * n + static_cast<std::uint64_t>(x);
  return r;
}

std::vector<int> CochainSpace::tuple(std::uint64_t rank) const {
  std::vector<int> t(static_cast<std::size_t>(degree_));
  const auto n = static_cast<std::uint64_t>(group().order());
  for (int p = degree_ - 1; p >= 0; --p) {
    t[static_cast<std::size_t>(p)] = static_cast<int>(rank % n);
    rank /= n;
  }
  return t;
}

Cochain::Cochain(CochainSpace space, IntVector values) : space_(std::move(space)), values_(space_.space().reduce(std::move(values))) {}

Cochain Cochain::zero(const CochainSpace& space) { return Cochain(space, IntVector::Constant(space.dimension(), Integer(0))); }

Cochain Cochain::from_function(const CochainSpace& space, const std::function<IntVector(std::span<const int>)>& f) {
  IntVector v(space.dimension());
  for_each_tuple(space.group().order(), space.degree(), [&](std::uint64_t rank, const std::vector<int>& t) {
    const IntVector val = f(t);
    if (val.size() != space.slots()) throw InvalidArgument("cochain value has the wrong number of coordinates");
    for (Index s = 0; s < space.slots(); ++s) v(space.position(rank, s)) = val(s);
  });
  return Cochain(space, std::move(v));
}

AbElement Cochain::at(std::span<const int> tuple) const {
  const std::uint64_t r = space_.tuple_rank(tuple);
  return AbElement(space_.module().base(), values_.segment(space_.position(r, 0), space_.slots()));
}

AbHom face_map(const CochainSpace& space, int j) {
  if (j < 0 || j > space.degree() + 1) throw InvalidArgument("face map index out of range");
  const CochainSpace target = space.next();
  BlockBuilder b(space, target);
  add_face(b, space, j, 1);
  return b.build();
}

AbHom differential(const CochainSpace& space) {
  const CochainSpace target = space.next();
  BlockBuilder b(space, target);
  for (int j = 0; j <= space.degree() + 1; ++j) add_face(b, space, j, j % 2 ? -1 : 1);
  return b.build();
}

AbHom transposition_action(const CochainSpace& space, int i) {
  const int n = space.degree();
  if (i < 1 || i > n) throw InvalidArgument("transposition index out of range");
  const FinGroup& g = space.group();
  BlockBuilder b(space, space);
  std::vector<int> src(static_cast<std::size_t>(n));
  for_each_tuple(g.order(), n, [&](std::uint64_t rank, const std::vector<int>& t) {
    src = t;
    int act = -1;
    const auto p = static_cast<std::size_t>(i - 1);  // 0-based position of g_i
    if (i == 1) {
      act = t[0];
      src[0] = g.inv(t[0]);
      if (n >= 2) src[1] = g.mul(t[0], t[1]);
    } else {
      src[p - 1] = g.mul(t[p - 1], t[p]);
      src[p] = g.inv(t[p]);
      if (i < n) src[p + 1] = g.mul(t[p], t[p + 1]);
    }
    b.add(rank, space.tuple_rank(src), act, -1);
  });
  return b.build();
}

InvariantSubspace invariant_subspace(const CochainSpace& space) {
  const int n = space.degree();
  const AbGroup& c = space.space();
  const Index dim = space.dimension();
  Guards::check_entries(static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(dim), 1, "invariance conditions");
  SparseIntMatrix stacked(static_cast<Index>(n) * dim, dim);
  std::vector<IntTriplet> triplets;
  SparseIntMatrix id(dim, dim);
  id.setIdentity();
  for (int i = 1; i <= n; ++i) {
    const SparseIntMatrix d = transposition_action(space, i).matrix() - id;
    for (Index r = 0; r < d.outerSize(); ++r) {
      for (SparseIntMatrix::InnerIterator it(d, r); it; ++it) triplets.emplace_back((i - 1) * dim + r, it.col(), it.value());
    }
  }
  stacked.setFromTriplets(triplets.begin(), triplets.end());
  const AbHom conditions(c, c.repeat(static_cast<std::uint64_t>(n)), std::move(stacked));
  Subquotient sub = homology(AbHom::zero(AbGroup(), c), conditions);
  return {sub.group(), AbHom(sub.group(), c, sub.generators()), sub};
}

}  // namespace symcoh
