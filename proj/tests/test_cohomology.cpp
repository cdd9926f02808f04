#include "doctest.h"
#include "symcoh/cohomology.hpp"

using namespace symcoh;

namespace {

GModule sign_c2() {
  return module_from_matrices(make_group("C2"), AbGroup({0}), {int_matrix({{1}}), int_matrix({{-1}})});
}

IntVector scalar(long long v) { return IntVector::Constant(1, Integer(v)); }

// H^n(C_m, A) for trivial A = Z/k (k = 0 for Z) from the periodic resolution:
// A/mA in even positive degrees, the m-torsion of A in odd degrees.
AbGroup cyclic_oracle(long long m, long long k, int n) {
  if (n == 0) return AbGroup::cyclic(Integer(k));
  if (n % 2 == 0) return AbGroup::cyclic(k == 0 ? Integer(m) : gcd(Integer(m), Integer(k)));
  return AbGroup::cyclic(k == 0 ? Integer(1) : gcd(Integer(m), Integer(k)));
}

}  // namespace

TEST_CASE("low-degree values for C2 and C4 with integer coefficients") {
  const FinGroup c2 = make_group("C2"), c4 = make_group("C4");
  const GModule z2 = trivial_module(c2, AbGroup({0})), z4 = trivial_module(c4, AbGroup({0}));
  CHECK(cohomology(c2, z2, 2).group_value == AbGroup({2}));
  CHECK(symmetric_cohomology(c2, z2, 2).group_value == AbGroup());
  CHECK(cohomology(c4, z4, 2).group_value == AbGroup({4}));
  CHECK(symmetric_cohomology(c4, z4, 2).group_value == AbGroup({2}));
}

TEST_CASE("cyclic groups against the periodic resolution") {
  for (long long m = 1; m <= 6; ++m) {
    const FinGroup g = cyclic_group(static_cast<int>(m));
    for (long long k : {0, 2, 3, 4, 6}) {
      const CochainComplex cx(trivial_module(g, AbGroup::cyclic(Integer(k))));
      const int top = m <= 4 ? 4 : 3;
      for (int n = 0; n <= top; ++n) CHECK(cx.cohomology(n).group() == cyclic_oracle(m, k, n));
    }
  }
  // Sign action: A^G = 0, ker N / (t - 1)A = Z/2.
  const CochainComplex sx(sign_c2());
  CHECK(sx.cohomology(0).group() == AbGroup());
  for (int n = 1; n <= 4; ++n) CHECK(sx.cohomology(n).group() == (n % 2 ? AbGroup({2}) : AbGroup()));
}

TEST_CASE("trivial group and degree zero") {
  const GModule m = trivial_module(make_group("C1"), AbGroup({6, 0}));
  for (int n = 1; n <= 4; ++n) {
    CHECK(cohomology(m.group(), m, n).group_value == AbGroup());
    CHECK(symmetric_cohomology(m.group(), m, n).group_value == AbGroup());
  }
  CHECK(cohomology(m.group(), m, 0).group_value == AbGroup({6, 0}));
  // H^0 = A^G for a non-trivial action on Z^2 (swap): invariants are the diagonal.
  const FinGroup c2 = make_group("C2");
  const GModule swap = module_from_matrices(c2, AbGroup({0, 0}), {int_matrix({{1, 0}, {0, 1}}), int_matrix({{0, 1}, {1, 0}})});
  const CohomologyResult h0 = cohomology(c2, swap, 0);
  CHECK(h0.group_value == AbGroup({0}));
  CHECK(h0.representatives[0].values()(0) == h0.representatives[0].values()(1));
  CHECK_THROWS_AS(cohomology(make_group("C3"), swap, 0), InvalidArgument);
}

TEST_CASE("representatives generate with the right orders") {
  for (const char* gs : {"C2", "C4", "C2xC2", "S3"}) {
    const FinGroup g = make_group(gs);
    for (long long k : {0, 2, 4}) {
      const CochainComplex cx(trivial_module(g, AbGroup::cyclic(Integer(k))));
      for (int n = 1; n <= 3; ++n) {
        for (bool sym : {false, true}) {
          const CohomologyResult r = cx.result(n, sym);
          REQUIRE(r.representatives.size() == r.group_value.factors().size());
          for (std::size_t i = 0; i < r.representatives.size(); ++i) {
            const Cochain& c = r.representatives[i];
            CHECK(is_cocycle(c));
            if (sym) CHECK(cx.invariants(n).lattice.is_cycle(c.values()));
            const Integer d = r.group_value.factors()[i];
            if (d.is_zero() || (sym && n > 2)) continue;
            const auto cert = is_coboundary(Cochain(c.space(), c.values() * d));
            REQUIRE(cert.is_coboundary);
            CHECK(differential(c.space().previous()).apply(cert.witness->values()) == Cochain(c.space(), c.values() * d).values());
            CHECK(class_order(c, d) == d);
          }
        }
      }
    }
  }
}

TEST_CASE("cocycle and coboundary tests") {
  const FinGroup c2 = make_group("C2");
  const GModule z = trivial_module(c2, AbGroup({0}));
  const CochainSpace s2(z, 2);
  const Cochain zero = Cochain::zero(s2);
  CHECK(is_cocycle(zero));
  const auto zc = is_coboundary(zero);
  CHECK(zc.is_coboundary);
  CHECK(zc.witness->is_zero());
  const Cochain ind = Cochain::from_function(s2, [](std::span<const int> t) { return scalar(t[0] == 1 && t[1] == 1); });
  CHECK(is_cocycle(ind));
  CHECK_FALSE(is_coboundary(ind).is_coboundary);
  const CochainSpace s1(z, 1);
  const Cochain psi = Cochain::from_function(s1, [](std::span<const int> t) { return scalar(t[0] == 0 ? -2 : 7); });
  const Cochain dpsi(s2, differential(s1).apply(psi.values()));
  const auto w = is_coboundary(dpsi);
  REQUIRE(w.is_coboundary);
  CHECK(differential(s1).apply(w.witness->values()) == dpsi.values());
}

TEST_CASE("comparison map") {
  const FinGroup c2 = make_group("C2"), c4 = make_group("C4");
  const ComparisonResult a = comparison_map(c2, trivial_module(c2, AbGroup({0})), 2);
  CHECK(a.kernel == AbGroup());
  CHECK(a.image == AbGroup());
  const ComparisonResult b = comparison_map(c4, trivial_module(c4, AbGroup({0})), 2);
  CHECK(b.kernel == AbGroup());
  CHECK(b.image == AbGroup({2}));
  for (const char* gs : {"C3", "C5"}) {
    const FinGroup g = make_group(gs);
    for (long long k : {0, 4, 5}) {
      const ComparisonResult c = comparison_map(g, trivial_module(g, AbGroup::cyclic(Integer(k))), 2);
      CHECK(c.kernel == AbGroup());
      CHECK(c.image == c.map.target());
    }
  }
  const FinGroup c3c3 = make_group("C3xC3");
  for (long long k : {0, 4, 5}) {
    const ComparisonResult c = comparison_map(c3c3, trivial_module(c3c3, AbGroup::cyclic(Integer(k))), 2);
    CHECK(c.kernel == AbGroup());
    CHECK(c.image == c.map.target());
  }
}

TEST_CASE("symmetric representatives satisfy the pointwise identities") {
  for (const char* gs : {"C4", "S3", "C2xC2"}) {
    const FinGroup g = make_group(gs);
    const GModule m = trivial_module(g, AbGroup({4}));
    for (const Cochain& c : symmetric_cohomology(g, m, 2).representatives) {
      for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
          const AbElement v = c.at(std::vector<int>{a, b});
          CHECK(v == -act(m, a, c.at(std::vector<int>{g.inv(a), g.mul(a, b)})));
          CHECK(v == -c.at(std::vector<int>{g.mul(a, b), g.inv(b)}));
        }
      }
    }
  }
}
