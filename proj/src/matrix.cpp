#include "symcoh/matrix.hpp"

#include "symcoh/errors.hpp"

namespace symcoh {

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.front().size());
  IntMatrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    if (static_cast<Index>(rows[i].size()) != c) throw InvalidArgument("int_matrix: ragged rows");
    for (Index j = 0; j < c; ++j) m(i, j) = Integer(rows[i][j]);
  }
  return m;
}

void prune_zeros(SparseIntMatrix& m) {
  m.prune([](Index, Index, const Integer& v) { return !v.is_zero(); });
}

SparseIntMatrix to_sparse(const IntMatrix& m) {
  std::vector<IntTriplet> triplets;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!m(i, j).is_zero()) triplets.emplace_back(i, j, m(i, j));
    }
  }
  SparseIntMatrix s(m.rows(), m.cols());
  s.setFromTriplets(triplets.begin(), triplets.end());
  return s;
}

IntMatrix to_dense(const SparseIntMatrix& m) {
  IntMatrix d = IntMatrix::Constant(m.rows(), m.cols(), Integer(0));
  for (Index i = 0; i < m.outerSize(); ++i) {
    for (SparseIntMatrix::InnerIterator it(m, i); it; ++it) d(it.row(), it.col()) = it.value();
  }
  return d;
}

bool same_matrix(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

bool same_matrix(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  SparseIntMatrix diff = a - b;
  prune_zeros(diff);
  return diff.nonZeros() == 0;
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw InvalidArgument("determinant: matrix is not square");
  const Index n = input.rows();
  if (n == 0) return Integer(1);
  IntMatrix m = input;
  Integer sign(1);
  Integer prev(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (!m(i, k).is_zero()) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return Integer(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = divexact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace symcoh
