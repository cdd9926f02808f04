#include "doctest.h"
#include "symcoh/smith.hpp"

#include <random>

using namespace symcoh;

namespace {

bool is_diagonal_chain(const IntMatrix& d) {
  for (Index i = 0; i < d.rows(); ++i) {
    for (Index j = 0; j < d.cols(); ++j) {
      if (i != j && !d(i, j).is_zero()) return false;
    }
  }
  const Index n = std::min(d.rows(), d.cols());
  for (Index i = 0; i < n; ++i) {
    if (d(i, i).sign() < 0) return false;
    if (i + 1 < n && !divides(d(i, i), d(i + 1, i + 1))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto z = smith_normal_form(int_matrix({{0}}));
  CHECK(same_matrix(z.d, int_matrix({{0}})));
  CHECK(same_matrix(z.u, int_matrix({{1}})));
  CHECK(same_matrix(z.v, int_matrix({{1}})));
  auto id = smith_normal_form(int_matrix({{1, 0}, {0, 1}}));
  CHECK(same_matrix(id.d, int_matrix({{1, 0}, {0, 1}})));
  auto s = smith_normal_form(int_matrix({{2, 4}, {6, 8}}));
  CHECK(same_matrix(s.d, int_matrix({{2, 0}, {0, 4}})));
}

TEST_CASE("smith normal form is a unimodular diagonalization on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9), sparse(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const Index r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (Index i = 0; i < r; ++i) {
      for (Index j = 0; j < c; ++j) m(i, j) = sparse(rng) == 0 ? Integer(0) : Integer(entry(rng));
    }
    auto f = smith_normal_form(m);
    IntMatrix prod = f.u * m * f.v;
    REQUIRE(same_matrix(prod, f.d));
    CHECK(is_diagonal_chain(f.d));
    CHECK(abs(determinant(f.u)) == Integer(1));
    CHECK(abs(determinant(f.v)) == Integer(1));
    auto ed = elementary_divisors(m);
    for (Index i = 0; i < std::min(r, c); ++i) CHECK(ed[i] == f.d(i, i));
  }
}

TEST_CASE("residue smith engine tracks inverses") {
  std::mt19937 rng(11);
  for (std::int64_t m : {2, 4, 12, 36, 97}) {
    rings::Residues ring(m);
    std::uniform_int_distribution<std::int64_t> entry(0, m - 1);
    for (int trial = 0; trial < 50; ++trial) {
      RowMatrix<std::int64_t> a(4, 5);
      for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 5; ++j) a(i, j) = entry(rng);
      SmithEngine<rings::Residues> e(ring, a, {true, true, true, true});
      e.diagonalize();
      auto red = [&](RowMatrix<std::int64_t> x) {
        for (Index i = 0; i < x.rows(); ++i)
          for (Index j = 0; j < x.cols(); ++j) x(i, j) = ring.reduce(x(i, j));
        return x;
      };
      // entries < m < 2^31 and dimension 5: products fit in int64
      CHECK(red(e.u() * a * e.v()) == e.a());
      CHECK(red(e.u() * e.u_inv()) == RowMatrix<std::int64_t>::Identity(4, 4));
      CHECK(red(e.v() * e.v_inv()) == RowMatrix<std::int64_t>::Identity(5, 5));
      for (Index i = 0; i + 1 < e.rank(); ++i) CHECK(ring.divides(e.diagonal(i), e.diagonal(i + 1)));
      for (Index i = 0; i < e.rank(); ++i) CHECK(m % e.diagonal(i) == 0);
    }
  }
}
