#include "symcoh/smith.hpp"

namespace symcoh {

namespace {

RowMatrix<Integer> to_rows(const IntMatrix& m) { return RowMatrix<Integer>(m); }

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  Guards::check_entries(m.rows(), m.cols(), "smith_normal_form");
  SmithEngine<rings::Integers> engine(rings::Integers{}, to_rows(m), {.u = true, .v = true});
  engine.diagonalize();
  return {IntMatrix(engine.u()), IntMatrix(engine.a()), IntMatrix(engine.v())};
}

std::vector<Integer> elementary_divisors(const IntMatrix& m) {
  Guards::check_entries(m.rows(), m.cols(), "elementary_divisors");
  SmithEngine<rings::Integers> engine(rings::Integers{}, to_rows(m), {});
  engine.compress_rows();
  engine.drop_zero_rows();
  engine.diagonalize();
  std::vector<Integer> out;
  const Index n = std::min(m.rows(), m.cols());
  out.reserve(n);
  for (Index i = 0; i < n; ++i) out.push_back(i < engine.rank() ? engine.diagonal(i) : Integer(0));
  return out;
}

}  // namespace symcoh
