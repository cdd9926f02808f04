#include "doctest.h"
#include "symcoh/cohomology.hpp"
#include "symcoh/homogeneous.hpp"

using namespace symcoh;

TEST_CASE("alternative differential examples") {
  const GModule m = trivial_module(make_group("C3"), AbGroup({0}));
  const CochainSpace s0(m, 0), s1(m, 1), s2(m, 2);
  CHECK(alt_differential(s0).is_zero());
  CHECK(alt_differential(s1).apply(Cochain::zero(s1).values()).isZero());
  // Degree 0 agrees with the ordinary differential for any action.
  const GModule sign = module_from_matrices(make_group("C2"), AbGroup({0}), {int_matrix({{1}}), int_matrix({{-1}})});
  CHECK(alt_differential(CochainSpace(sign, 0)) == differential(CochainSpace(sign, 0)));
  CHECK(compose(alt_differential(s2), alt_differential(s1)).is_zero());
}

TEST_CASE("change of variables") {
  const FinGroup c2 = make_group("C2");
  const GModule m = trivial_module(c2, AbGroup({0}));
  const CochainSpace s1(m, 1), s2(m, 2);
  CHECK(j_map(s1) == AbHom::identity(s1.space()));
  CHECK(partial_products_map(s1) == AbHom::identity(s1.space()));
  // Partial products send (x,x) to the value at (x, x x) = (x, e).
  const Cochain at_xe = Cochain::from_function(s2, [](std::span<const int> t) {
    return IntVector::Constant(1, Integer(t[0] == 1 && t[1] == 0 ? 1 : 0));
  });
  const IntVector moved = partial_products_map(s2).apply(at_xe.values());
  CHECK(moved(static_cast<Index>(s2.tuple_rank(std::vector<int>{1, 1}))) == Integer(1));
  CHECK(j_map(s2).apply(moved) == at_xe.values());
  CHECK(j_map(s2).apply(Cochain::zero(s2).values()).isZero());
}

TEST_CASE("alternative transpositions") {
  const GModule m = trivial_module(make_group("S3"), AbGroup({0}));
  const CochainSpace s1(m, 1), s3(m, 3);
  const Cochain psi = Cochain::from_function(s1, [](std::span<const int> t) { return IntVector::Constant(1, Integer(10 + t[0])); });
  const Cochain moved(s1, alt_transposition_action(s1, 1).apply(psi.values()));
  for (int g = 0; g < 6; ++g) {
    CHECK(moved.at(std::vector<int>{g}).coords()(0) == -Integer(10 + m.group().inv(g)));
  }
  for (int i = 2; i <= 3; ++i) {
    const IntMatrix d = alt_transposition_action(s3, i).dense();
    for (Index r = 0; r < d.rows(); ++r) {
      for (Index c = 0; c < d.cols(); ++c) CHECK((d(r, c).is_zero() || d(r, c) == Integer(-1)));
    }
  }
  CHECK_THROWS_AS(alt_transposition_action(s1, 2), InvalidArgument);
}

TEST_CASE("remark checks and transported cohomology") {
  for (const char* gs : {"C2", "C3", "S3"}) {
    const FinGroup g = make_group(gs);
    for (long long k : {0, 4}) {
      const GModule m = trivial_module(g, AbGroup::cyclic(Integer(k)));
      const CochainComplex cx(m);
      for (int n = 0; n <= 3; ++n) {
        const VerificationReport r = verify_remark(CochainSpace(m, n));
        CHECK(r.all_hold());
        CHECK(alt_cohomology(m, n) == cx.cohomology(n).group());
      }
    }
  }
  // The literal partial-product substitution intertwines the other way round.
  const GModule m = trivial_module(make_group("S3"), AbGroup({0}));
  const CochainSpace s2(m, 2);
  CHECK(compose(differential(s2), partial_products_map(s2)) == compose(partial_products_map(s2.next()), alt_differential(s2)));
  CHECK_FALSE(compose(partial_products_map(s2.next()), differential(s2)) == compose(alt_differential(s2), partial_products_map(s2)));
}
