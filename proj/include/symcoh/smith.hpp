#ifndef SYMCOH_SMITH_HPP
#define SYMCOH_SMITH_HPP

#include "symcoh/errors.hpp"
#include "symcoh/integer.hpp"
#include "symcoh/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>

namespace symcoh {

namespace rings {

/// The ring Z.
struct Integers {
  using Scalar = Integer;

  Scalar zero() const { return Integer(0); }
  Scalar one() const { return Integer(1); }
  Scalar reduce(const Scalar& x) const { return x; }
  Scalar from(const Integer& x) const { return x; }
  Integer lift(const Scalar& x) const { return x; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& a) const { return -a; }
  /// a*x + b*y
  Scalar lin(const Scalar& a, const Scalar& x, const Scalar& b, const Scalar& y) const {
    if (b.is_zero() || y.is_zero()) return a * x;
    if (a.is_zero() || x.is_zero()) return b * y;
    return a * x + b * y;
  }
  bool is_zero(const Scalar& x) const { return x.is_zero(); }
  bool is_unit(const Scalar& x) const { return x == Integer(1) || x == Integer(-1); }
  /// Pivot preference; smaller is better.
  Integer size(const Scalar& x) const { return abs(x); }
  std::optional<Scalar> quotient(const Scalar& a, const Scalar& b) const {
    if (b.is_zero()) return std::nullopt;
    if (b == Integer(1)) return a;
    if (b == Integer(-1)) return -a;
    if (!(a % b).is_zero()) return std::nullopt;
    return a / b;
  }
  /// Unit u such that u*x is the preferred associate.
  Scalar normal_unit(const Scalar& x) const { return x.sign() < 0 ? Integer(-1) : Integer(1); }
  Scalar unit_inverse(const Scalar& u) const { return u; }
  bool divides(const Scalar& a, const Scalar& b) const { return symcoh::divides(a, b); }

  struct Gcdex {
    Scalar u, v, aq, bq;  // u*a + v*b = g, a = g*aq, b = g*bq
  };
  Gcdex gcdex(const Scalar& a, const Scalar& b) const {
    Bezout e = extended_gcd(a, b);
    return {e.u, e.v, a / e.g, b / e.g};
  }
};

/// The ring Z/m for 2 <= m < 2^31, scalars held in [0, m).
struct Residues {
  using Scalar = std::int64_t;
  static constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

  std::int64_t m;

  explicit Residues(std::int64_t modulus) : m(modulus) {}

  Scalar zero() const { return 0; }
  Scalar one() const { return 1 % m; }
  Scalar reduce(std::int64_t x) const {
    x %= m;
    return x < 0 ? x + m : x;
  }
  Scalar from(const Integer& x) const {
    if (x.is_small()) return reduce(x.to_int64());
    return mod(x, Integer(m)).to_int64();
  }
  Integer lift(const Scalar& x) const { return Integer(x); }
  Scalar add(Scalar a, Scalar b) const {
    Scalar r = a + b;
    return r >= m ? r - m : r;
  }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % m; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : m - a; }
  Scalar lin(Scalar a, Scalar x, Scalar b, Scalar y) const { return (a * x + b * y) % m; }
  bool is_zero(Scalar x) const { return x == 0; }
  bool is_unit(Scalar x) const { return gcd64(x, m) == 1; }
  std::int64_t size(Scalar x) const { return gcd64(x, m); }
  std::optional<Scalar> quotient(Scalar a, Scalar b) const {
    const std::int64_t g = gcd64(b, m);
    if (a % g != 0) return std::nullopt;
    const std::int64_t mg = m / g;
    if (mg == 1) return 0;
    const std::int64_t inv = *inverse_mod((b / g) % mg, mg);
    return ((a / g) % mg) * inv % mg;
  }
  Scalar normal_unit(Scalar x) const {
    const std::int64_t g = gcd64(x, m);
    const std::int64_t mg = m / g;
    std::int64_t u0 = mg == 1 ? 0 : *inverse_mod((x / g) % mg, mg);
    for (std::int64_t u = u0;; u += mg) {
      if (u != 0 && gcd64(u, m) == 1) return u % m;
    }
  }
  Scalar unit_inverse(Scalar u) const { return *inverse_mod(u, m); }
  bool divides(Scalar a, Scalar b) const { return b % gcd64(a, m) == 0; }

  struct Gcdex {
    Scalar u, v, aq, bq;
  };
  Gcdex gcdex(Scalar a, Scalar b) const {
    Bezout64 e = extended_gcd64(a, b);
    return {reduce(e.u), reduce(e.v), a / e.g, b / e.g};
  }
};

}  // namespace rings

/// Smith elimination over a principal ideal ring, with optional tracking of
/// the transforms.  Invariant throughout: u * original * v == a, u * u_inv == 1
/// and v * v_inv == 1 (each tracked matrix only when requested).
template <class Ring>
class SmithEngine {
 public:
  using Scalar = typename Ring::Scalar;
  using Matrix = RowMatrix<Scalar>;

  struct Tracking {
    bool u = false;
    bool u_inv = false;
    bool v = false;
    bool v_inv = false;
  };

  SmithEngine(Ring ring, Matrix a, Tracking tracking) : ring_(std::move(ring)), a_(std::move(a)), track_(tracking) {
    const Index r = a_.rows();
    const Index c = a_.cols();
    if (track_.u || track_.u_inv) Guards::check_entries(r, r, "Smith row transform");
    if (track_.v || track_.v_inv) Guards::check_entries(c, c, "Smith column transform");
    if (track_.u) u_ = identity(r);
    if (track_.u_inv) u_inv_ = identity(r);
    if (track_.v) v_ = identity(c);
    if (track_.v_inv) v_inv_ = identity(c);
  }

  const Ring& ring() const { return ring_; }
  const Matrix& a() const { return a_; }
  const Matrix& u() const { return u_; }
  const Matrix& u_inv() const { return u_inv_; }
  const Matrix& v() const { return v_; }
  const Matrix& v_inv() const { return v_inv_; }
  Index rank() const { return rank_; }
  Scalar diagonal(Index i) const { return a_(i, i); }

  /// Row echelon form by row operations.  Afterwards only the first
  /// `rank()` rows can be nonzero.
  void compress_rows() {
    Index r = 0;
    for (Index col = 0; col < a_.cols() && r < a_.rows(); ++col) {
      Index best = -1;
      for (Index i = r; i < a_.rows(); ++i) {
        if (ring_.is_zero(a_(i, col))) continue;
        if (best < 0 || ring_.size(a_(i, col)) < ring_.size(a_(best, col))) best = i;
        if (ring_.is_unit(a_(i, col))) break;
      }
      if (best < 0) continue;
      swap_rows(r, best);
      for (Index i = r + 1; i < a_.rows(); ++i) {
        if (!ring_.is_zero(a_(i, col))) clear_by_row(r, i, col);
      }
      ++r;
    }
    rank_ = r;
  }

  /// Discards rows known to be zero after compress_rows().  Only legal when
  /// the row transform is not tracked.
  void drop_zero_rows() {
    if (track_.u || track_.u_inv) throw InvalidArgument("drop_zero_rows: row transform is tracked");
    a_.conservativeResize(rank_, a_.cols());
  }

  /// Full Smith form: diagonal, pivots normalized, d_0 | d_1 | ... | d_{rank-1}.
  void diagonalize() {
    const Index lim = std::min(a_.rows(), a_.cols());
    Index p = 0;
    for (; p < lim; ++p) {
      if (!bring_pivot(p)) break;
      clear_cross(p);
      normalize(p);
    }
    rank_ = p;
    fix_divisibility();
  }

 private:
  Matrix identity(Index n) const {
    Matrix m = Matrix::Constant(n, n, ring_.zero());
    for (Index i = 0; i < n; ++i) m(i, i) = ring_.one();
    return m;
  }

  bool bring_pivot(Index p) {
    Index bi = -1, bj = -1;
    auto search = [&] {
      for (Index i = p; i < a_.rows(); ++i) {
        for (Index j = p; j < a_.cols(); ++j) {
          const Scalar& x = a_(i, j);
          if (ring_.is_zero(x)) continue;
          if (ring_.is_unit(x)) {
            bi = i;
            bj = j;
            return;
          }
          if (bi < 0 || ring_.size(x) < ring_.size(a_(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
    };
    search();
    if (bi < 0) return false;
    swap_rows(p, bi);
    swap_cols(p, bj);
    return true;
  }

  void clear_cross(Index p) {
    for (;;) {
      for (Index i = p + 1; i < a_.rows(); ++i) {
        if (!ring_.is_zero(a_(i, p))) clear_by_row(p, i, p);
      }
      bool dirty = false;
      for (Index j = p + 1; j < a_.cols(); ++j) {
        if (ring_.is_zero(a_(p, j))) continue;
        if (clear_by_col(p, j)) dirty = true;
      }
      if (!dirty) return;
      bool below = false;
      for (Index i = p + 1; i < a_.rows() && !below; ++i) below = !ring_.is_zero(a_(i, p));
      if (!below) return;
    }
  }

  void normalize(Index p) {
    const Scalar unit = ring_.normal_unit(a_(p, p));
    if (unit == ring_.one()) return;
    scale_row(a_, p, unit, p);
    if (track_.u) scale_row(u_, p, unit, 0);
    if (track_.u_inv) scale_col(u_inv_, p, ring_.unit_inverse(unit));
  }

  void fix_divisibility() {
    for (Index i = 0; i < rank_; ++i) {
      for (Index j = i + 1; j < rank_; ++j) {
        if (ring_.divides(a_(i, i), a_(j, j))) continue;
        // [[a,0],[0,b]] -> add row j to row i, then re-clear the cross at i.
        row_op(i, j, ring_.one(), ring_.one(), ring_.zero(), ring_.one(), ring_.one(), i);
        clear_cross(i);
        normalize(i);
        normalize(j);
        j = i;  // restart: a_(i,i) changed
      }
    }
    // Over Z/m an lcm can vanish; such pivots end up last.
    while (rank_ > 0 && ring_.is_zero(a_(rank_ - 1, rank_ - 1))) --rank_;
  }

  // Zero a_(i, col) using the pivot row p (which has a_(p, col) != 0).
  void clear_by_row(Index p, Index i, Index col) {
    const Scalar y = a_(p, col);
    const Scalar x = a_(i, col);
    if (auto q = ring_.quotient(x, y)) {
      row_op(p, i, ring_.one(), ring_.zero(), ring_.neg(*q), ring_.one(), ring_.one(), col);
      return;
    }
    auto e = ring_.gcdex(y, x);
    // det [[u, v], [-bq, aq]] = u*aq + v*bq = 1
    row_op(p, i, e.u, e.v, ring_.neg(ring_.reduce(e.bq)), ring_.reduce(e.aq), ring_.one(), col);
  }

  // Zero a_(p, j) using the pivot column p.  Returns true when column p changed.
  bool clear_by_col(Index p, Index j) {
    const Scalar y = a_(p, p);
    const Scalar x = a_(p, j);
    if (auto q = ring_.quotient(x, y)) {
      col_op(p, j, ring_.one(), ring_.neg(*q), ring_.zero(), ring_.one());
      return false;
    }
    auto e = ring_.gcdex(y, x);
    // [c_p, c_j] <- [c_p, c_j] [[u, -bq], [v, aq]]
    col_op(p, j, e.u, ring_.neg(ring_.reduce(e.bq)), e.v, ring_.reduce(e.aq));
    return true;
  }

  void swap_rows(Index i, Index j) {
    if (i == j) return;
    a_.row(i).swap(a_.row(j));
    if (track_.u) u_.row(i).swap(u_.row(j));
    if (track_.u_inv) u_inv_.col(i).swap(u_inv_.col(j));
  }

  void swap_cols(Index i, Index j) {
    if (i == j) return;
    a_.col(i).swap(a_.col(j));
    if (track_.v) v_.col(i).swap(v_.col(j));
    if (track_.v_inv) v_inv_.row(i).swap(v_inv_.row(j));
  }

  // [r_i; r_j] <- [[ea, eb], [ec, ed]] [r_i; r_j] on columns >= from, where
  // det is the (unit) determinant of the block.
  void row_op(Index i, Index j, Scalar ea, Scalar eb, Scalar ec, Scalar ed, Scalar det, Index from) {
    combine_rows(a_, i, j, ea, eb, ec, ed, from);
    if (track_.u) combine_rows(u_, i, j, ea, eb, ec, ed, 0);
    if (track_.u_inv) {
      // E^{-1} = det^{-1} [[ed, -eb], [-ec, ea]], applied on the right.
      const Scalar di = ring_.unit_inverse(det);
      combine_cols(u_inv_, i, j, ring_.mul(di, ed), ring_.neg(ring_.mul(di, eb)), ring_.neg(ring_.mul(di, ec)),
                   ring_.mul(di, ea));
    }
  }

  // [c_i, c_j] <- [c_i, c_j] [[ta, tb], [tc, td]], det = 1.
  void col_op(Index i, Index j, Scalar ta, Scalar tb, Scalar tc, Scalar td) {
    combine_cols(a_, i, j, ta, tb, tc, td);
    if (track_.v) combine_cols(v_, i, j, ta, tb, tc, td);
    if (track_.v_inv) {
      // T^{-1} = [[td, -tb], [-tc, ta]], applied on the left.
      combine_rows(v_inv_, i, j, td, ring_.neg(tb), ring_.neg(tc), ta, 0);
    }
  }

  void combine_rows(Matrix& m, Index i, Index j, const Scalar& ea, const Scalar& eb, const Scalar& ec,
                    const Scalar& ed, Index from) const {
    const Index n = m.cols();
    const bool zero_b = ring_.is_zero(eb);
    const bool id_a = ea == ring_.one() && zero_b;
    for (Index k = from; k < n; ++k) {
      const Scalar x = m(i, k);
      const Scalar y = m(j, k);
      if (ring_.is_zero(x) && ring_.is_zero(y)) continue;
      if (!id_a) m(i, k) = ring_.lin(ea, x, eb, y);
      m(j, k) = ring_.lin(ec, x, ed, y);
    }
  }

  void combine_cols(Matrix& m, Index i, Index j, const Scalar& ta, const Scalar& tb, const Scalar& tc,
                    const Scalar& td) const {
    const Index n = m.rows();
    const bool id_i = ta == ring_.one() && ring_.is_zero(tc);
    for (Index k = 0; k < n; ++k) {
      const Scalar x = m(k, i);
      const Scalar y = m(k, j);
      if (ring_.is_zero(x) && ring_.is_zero(y)) continue;
      if (!id_i) m(k, i) = ring_.lin(ta, x, tc, y);
      m(k, j) = ring_.lin(tb, x, td, y);
    }
  }

  void scale_row(Matrix& m, Index i, const Scalar& s, Index from) const {
    for (Index k = from; k < m.cols(); ++k) m(i, k) = ring_.mul(s, m(i, k));
  }

  void scale_col(Matrix& m, Index i, const Scalar& s) const {
    for (Index k = 0; k < m.rows(); ++k) m(k, i) = ring_.mul(s, m(k, i));
  }

  Ring ring_;
  Matrix a_;
  Tracking track_;
  Matrix u_, u_inv_, v_, v_inv_;
  Index rank_ = 0;
};

/// U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithNormalForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

/// Smith normal form over Z.  Throws ResourceGuardError when M or its
/// transforms exceed the entry cap.
SmithNormalForm smith_normal_form(const IntMatrix& m);

/// Diagonal entries only (d_1 | d_2 | ..., zeros last), no transforms.
std::vector<Integer> elementary_divisors(const IntMatrix& m);

}  // namespace symcoh

#endif  // SYMCOH_SMITH_HPP
