#ifndef SYMCOH_MATRIX_HPP
#define SYMCOH_MATRIX_HPP

#include "symcoh/integer.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <vector>

namespace symcoh {

using Index = Eigen::Index;

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using SparseIntMatrix = Eigen::SparseMatrix<Integer, Eigen::RowMajor>;
using IntTriplet = Eigen::Triplet<Integer>;

template <class Scalar>
using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Builds a dense matrix from nested row lists.
IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows);

/// Drops explicitly stored zeros.
void prune_zeros(SparseIntMatrix& m);

SparseIntMatrix to_sparse(const IntMatrix& m);
IntMatrix to_dense(const SparseIntMatrix& m);

/// Exact equality including dimensions.
bool same_matrix(const IntMatrix& a, const IntMatrix& b);
bool same_matrix(const SparseIntMatrix& a, const SparseIntMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination; square input only.
Integer determinant(const IntMatrix& m);

}  // namespace symcoh

#endif  // SYMCOH_MATRIX_HPP
