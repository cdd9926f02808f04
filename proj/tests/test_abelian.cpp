#include "doctest.h"
#include "symcoh/abelian.hpp"

#include <map>
#include <random>
#include <set>

using namespace symcoh;

namespace {

AbHom hom(const AbGroup& s, const AbGroup& t, std::vector<std::vector<long long>> rows) {
  return AbHom(s, t, int_matrix(rows));
}

// Every element of a finite diagonal group, as coordinate vectors.
std::vector<IntVector> elements(const AbGroup& a) {
  std::vector<IntVector> out{IntVector::Constant(a.num_coords(), Integer(0))};
  for (Index i = 0; i < a.num_coords(); ++i) {
    std::vector<IntVector> next;
    const long long d = a.factor(i).to_int64();
    for (const auto& v : out) {
      for (long long x = 0; x < d; ++x) {
        IntVector w = v;
        w(i) = Integer(x);
        next.push_back(w);
      }
    }
    out = std::move(next);
  }
  return out;
}

using Key = std::vector<long long>;
Key key(const IntVector& v) {
  Key k;
  for (const auto& x : v) k.push_back(x.to_int64());
  return k;
}

// |Q[d]| for d = 1..dmax where Q = ker g / im f, by enumeration.
std::vector<long long> torsion_counts_brute(const AbHom& f, const AbHom& g, int dmax) {
  std::set<Key> im;
  for (const auto& x : elements(f.source())) im.insert(key(f.apply(x)));
  std::vector<IntVector> ker;
  for (const auto& x : elements(g.source())) {
    if (g.apply(x).isZero()) ker.push_back(x);
  }
  std::vector<long long> out;
  for (int d = 1; d <= dmax; ++d) {
    long long c = 0;
    for (const auto& x : ker) {
      if (im.count(key(g.source().reduce(x * Integer(d))))) ++c;
    }
    out.push_back(c / static_cast<long long>(im.size()));
  }
  return out;
}

std::vector<long long> torsion_counts(const AbGroup& q, int dmax) {
  std::vector<long long> out;
  for (int d = 1; d <= dmax; ++d) {
    long long c = 1;
    for (const auto& f : q.factors()) c *= gcd(Integer(d), f).to_int64();
    out.push_back(c);
  }
  return out;
}

AbGroup random_finite(std::mt19937& rng, int max_coords) {
  std::uniform_int_distribution<int> count(0, max_coords), mod(1, 6);
  std::vector<Integer> f;
  for (int i = count(rng); i > 0; --i) f.emplace_back(mod(rng));
  return AbGroup::diagonal(f);
}

// A random well-defined hom: entry (i,j) is a multiple of t_i / gcd(t_i, s_j).
AbHom random_hom(std::mt19937& rng, const AbGroup& s, const AbGroup& t) {
  std::uniform_int_distribution<int> e(-3, 3);
  IntMatrix m(t.num_coords(), s.num_coords());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const Integer& ti = t.factor(i);
      const Integer& sj = s.factor(j);
      if (sj.is_zero()) {
        m(i, j) = Integer(e(rng));
      } else if (ti.is_zero()) {
        m(i, j) = Integer(0);
      } else {
        m(i, j) = ti / gcd(ti, sj) * Integer(e(rng));
      }
    }
  }
  return AbHom(s, t, m);
}

}  // namespace

TEST_CASE("AbGroup canonical form") {
  CHECK(AbGroup::diagonal({Integer(4), Integer(6)}).canonical() == AbGroup({2, 12}));
  CHECK(AbGroup::diagonal({Integer(0), Integer(1), Integer(3)}).canonical() == AbGroup({3, 0}));
  CHECK(AbGroup({2, 4}).canonical() == AbGroup({2, 4}));
  CHECK(AbGroup().to_string() == "0");
  CHECK(AbGroup({0}).to_string() == "Z");
  CHECK(AbGroup({2, 4, 0, 0}).to_string() == "Z/2 + Z/4 + Z^2");
  CHECK_THROWS_AS(AbGroup({4, 2}), InvalidArgument);
  CHECK_THROWS_AS(AbGroup({1}), InvalidArgument);
  CHECK_THROWS_AS(AbGroup({0, 2}), InvalidArgument);
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    AbGroup c = random_finite(rng, 5).canonical();
    CHECK(c.is_canonical());
    CHECK(c.canonical() == c);
  }
}

TEST_CASE("element order") {
  const AbGroup z4({4});
  CHECK(element_order(AbElement::zero(z4)) == Integer(1));
  CHECK(element_order(AbElement(z4, IntVector::Constant(1, Integer(1)))) == Integer(4));
  CHECK(element_order(AbElement(AbGroup({0}), IntVector::Constant(1, Integer(1)))) == Integer(0));
  CHECK(element_order(AbElement(AbGroup({2, 6}), int_matrix({{1}, {2}}))) == Integer(6));
  CHECK(AbElement(z4, IntVector::Constant(1, Integer(-1))).coords()(0) == Integer(3));
}

TEST_CASE("hom well-definedness") {
  CHECK_THROWS_AS(hom(AbGroup({2}), AbGroup({0}), {{1}}), NotWellDefined);
  CHECK_THROWS_AS(hom(AbGroup({2}), AbGroup({3}), {{1}}), NotWellDefined);
  CHECK_NOTHROW(hom(AbGroup({2}), AbGroup({4}), {{2}}));
  CHECK_THROWS_AS(hom(AbGroup({2}), AbGroup({4}), {{1, 1}}), InvalidArgument);
  AbHom h = hom(AbGroup({0}), AbGroup({4}), {{7}});
  CHECK(h.dense()(0, 0) == Integer(3));
}

TEST_CASE("hom_kernel examples") {
  const AbGroup z({0}), z4({4});
  CHECK(hom_kernel(hom(z, z, {{2}})).group == AbGroup());
  auto k = hom_kernel(hom(z4, z4, {{2}}));
  CHECK(k.group == AbGroup({2}));
  CHECK(k.inclusion.dense()(0, 0) == Integer(2));
  CHECK(hom_kernel(AbHom::zero(z, z)).group == AbGroup({0}));
}

TEST_CASE("homology_at examples") {
  const AbGroup z({0}), z6({6});
  CHECK(homology_at(hom(z, z, {{2}}), AbHom::zero(z, AbGroup())) == AbGroup({2}));
  CHECK(homology_at(AbHom::zero(z6, z6), AbHom::zero(z6, z6)) == AbGroup({6}));
  CHECK(homology_at(hom(z, z, {{3}}), AbHom::zero(z, z)) == AbGroup({3}));
  CHECK_THROWS_AS(homology_at(hom(z, z, {{1}}), hom(z, z, {{1}})), CompositionNotZero);
}

TEST_CASE("image and cokernel") {
  const AbGroup z({0}), z4({4}), z12({12});
  auto im = image(hom(z4, z12, {{3}}));
  CHECK(im.group == AbGroup({4}));
  auto ck = cokernel(hom(z4, z12, {{3}}));
  CHECK(ck.group == AbGroup({3}));
  CHECK(compose(ck.projection, hom(z4, z12, {{3}})).is_zero());
  auto free_im = image(hom(AbGroup({0, 0}), AbGroup({0, 0}), {{2, 4}, {0, 6}}));
  CHECK(free_im.group == AbGroup({0, 0}));
  CHECK(cokernel(hom(AbGroup({0, 0}), AbGroup({0, 0}), {{2, 4}, {0, 6}})).group == AbGroup({2, 6}));
}

TEST_CASE("homology of 0 -> A -> 0 is A") {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    AbGroup a = random_finite(rng, 4);
    if (t % 3 == 0) a = a.direct_sum(AbGroup::free(1 + t % 2));
    const AbGroup zero;
    CHECK(homology_at(AbHom::zero(zero, a), AbHom::zero(a, zero)) == a.canonical());
  }
}

TEST_CASE("homology matches enumeration on random finite complexes") {
  std::mt19937 rng(17);
  for (int t = 0; t < 150; ++t) {
    const AbGroup a = random_finite(rng, 2), b = random_finite(rng, 3), c = random_finite(rng, 2);
    const AbHom g = random_hom(rng, b, c);
    // f = (kernel of g) composed with a random map into it keeps g o f = 0.
    const auto k = hom_kernel(g);
    CHECK(compose(g, k.inclusion).is_zero());
    const AbHom f = compose(k.inclusion, random_hom(rng, a, k.group));
    const Subquotient s = homology(f, g);
    const Subquotient e = homology(f, g, Engine::exact);
    REQUIRE(s.group() == e.group());
    CHECK(torsion_counts(s.group(), 12) == torsion_counts_brute(f, g, 12));
    // Generators are cycles with the advertised coordinates.
    for (Index j = 0; j < s.group().num_coords(); ++j) {
      IntVector expect = IntVector::Constant(s.group().num_coords(), Integer(0));
      expect(j) = Integer(1);
      CHECK(s.coordinates(IntVector(s.generators().col(j))) == expect);
      CHECK(e.coordinates(IntVector(e.generators().col(j))) == expect);
    }
    // Boundaries have zero class.
    for (const auto& x : elements(a)) {
      CHECK(s.coordinates(f.apply(x)).isZero());
      CHECK(e.coordinates(f.apply(x)).isZero());
    }
  }
}

TEST_CASE("kernels with free parts") {
  std::mt19937 rng(23);
  for (int t = 0; t < 100; ++t) {
    const AbGroup b = random_finite(rng, 2).direct_sum(AbGroup::free(1 + t % 3));
    const AbGroup c = random_finite(rng, 2).direct_sum(AbGroup::free(t % 2));
    const AbHom g = random_hom(rng, b, c);
    const auto k = hom_kernel(g);
    CHECK(compose(g, k.inclusion).is_zero());
    // rank-nullity on the free parts
    const Index rank_img = image(g).group.free_rank();
    CHECK(k.group.free_rank() + rank_img == b.free_rank());
    // Every small vector in the kernel has coordinates that map back to it.
    const Subquotient s = homology(AbHom::zero(AbGroup(), b), g);
    std::uniform_int_distribution<int> e(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
      IntVector w(k.group.num_coords());
      for (auto& x : w) x = Integer(e(rng));
      const IntVector x = k.inclusion.apply(w);
      CHECK(k.inclusion.apply(s.coordinates(x)) == x);
    }
  }
}

TEST_CASE("solve") {
  std::mt19937 rng(29);
  for (int t = 0; t < 100; ++t) {
    AbGroup b = random_finite(rng, 3), c = random_finite(rng, 3);
    if (t % 2) b = b.direct_sum(AbGroup::free(1));
    if (t % 4 == 1) c = c.direct_sum(AbGroup::free(1));
    const AbHom g = random_hom(rng, b, c);
    std::uniform_int_distribution<int> e(-5, 5);
    IntVector x(b.num_coords());
    for (auto& v : x) v = Integer(e(rng));
    const IntVector y = g.apply(x);
    for (Engine eng : {Engine::automatic, Engine::exact}) {
      auto sol = solve(g, y, eng);
      REQUIRE(sol.has_value());
      CHECK(g.apply(*sol) == y);
    }
    const auto ck = cokernel(g);
    IntVector z(c.num_coords());
    for (auto& v : z) v = Integer(e(rng));
    const bool in_image = ck.projection.apply(c.reduce(z)).isZero();
    CHECK(solve(g, z).has_value() == in_image);
    CHECK(solve(g, z, Engine::exact).has_value() == in_image);
  }
}

TEST_CASE("block-diagonal complexes split into torsion and free parts") {
  std::mt19937 rng(31);
  const auto block_sum = [](const AbHom& x, const AbHom& y) {
    IntMatrix m = IntMatrix::Constant(x.target().num_coords() + y.target().num_coords(),
                                      x.source().num_coords() + y.source().num_coords(), Integer(0));
    m.topLeftCorner(x.target().num_coords(), x.source().num_coords()) = x.dense();
    m.bottomRightCorner(y.target().num_coords(), y.source().num_coords()) = y.dense();
    return AbHom(x.source().direct_sum(y.source()), x.target().direct_sum(y.target()), m);
  };
  for (int t = 0; t < 80; ++t) {
    const AbGroup b1 = random_finite(rng, 3).direct_sum(AbGroup::diagonal({Integer(2 + t % 4)}));
    const AbGroup c1 = random_finite(rng, 2);
    const AbGroup b2 = random_finite(rng, 2).direct_sum(AbGroup::free(1 + t % 2));
    const AbGroup c2 = random_finite(rng, 2).direct_sum(AbGroup::free(t % 2));
    const AbHom g1 = random_hom(rng, b1, c1), g2 = random_hom(rng, b2, c2);
    const auto k1 = hom_kernel(g1), k2 = hom_kernel(g2);
    const AbHom f1 = compose(k1.inclusion, random_hom(rng, random_finite(rng, 2), k1.group));
    const AbHom f2 = compose(k2.inclusion, random_hom(rng, random_finite(rng, 2).direct_sum(AbGroup::free(1)), k2.group));
    const Subquotient whole = homology(block_sum(f1, f2), block_sum(g1, g2));
    const AbGroup expect = homology(f1, g1).group().direct_sum(homology(f2, g2).group()).canonical();
    CHECK(whole.group() == expect);
    const Index q = whole.group().num_coords();
    for (Index j = 0; j < q; ++j) {
      IntVector unit = IntVector::Constant(q, Integer(0));
      unit(j) = Integer(1);
      CHECK(whole.coordinates(IntVector(whole.generators().col(j))) == unit);
    }
    std::uniform_int_distribution<int> e(-3, 3);
    IntVector a(f1.source().num_coords() + f2.source().num_coords());
    for (auto& v : a) v = Integer(e(rng));
    CHECK(whole.coordinates(block_sum(f1, f2).apply(a)).isZero());
    // A class is zero exactly when both halves are boundaries.
    IntVector w(k1.group.num_coords() + k2.group.num_coords());
    for (auto& v : w) v = Integer(e(rng));
    const IntVector x = block_sum(k1.inclusion, k2.inclusion).apply(w);
    const bool zero1 = homology(f1, g1).coordinates(IntVector(x.head(b1.num_coords()))).isZero();
    const bool zero2 = homology(f2, g2).coordinates(IntVector(x.tail(b2.num_coords()))).isZero();
    CHECK(whole.coordinates(x).isZero() == (zero1 && zero2));
  }
}
