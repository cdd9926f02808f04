#ifndef SYMCOH_ABELIAN_HPP
#define SYMCOH_ABELIAN_HPP

#include "symcoh/errors.hpp"
#include "symcoh/integer.hpp"
#include "symcoh/matrix.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace symcoh {

/// A finitely generated abelian group given as Z^k / diag(d_1, ..., d_k).
///
/// A modulus of 0 is an infinite cyclic coordinate.  Groups built with the
/// list constructor are in invariant-factor form (d_1 | d_2 | ..., no 1s,
/// zeros last).  `diagonal()` accepts any moduli and keeps the coordinate
/// layout as given; cochain spaces rely on this to repeat the factors of A
/// once per tuple.
class AbGroup {
 public:
  AbGroup();  // trivial group
  /// Invariant-factor form; throws InvalidArgument when not canonical.
  explicit AbGroup(std::vector<Integer> invariant_factors);
  AbGroup(std::initializer_list<long long> invariant_factors);

  static AbGroup diagonal(std::vector<Integer> moduli);
  static AbGroup free(Index rank);
  static AbGroup cyclic(const Integer& n);  // n = 0 gives Z, n = 1 the trivial group

  const std::vector<Integer>& factors() const { return *factors_; }
  const Integer& factor(Index i) const { return (*factors_)[static_cast<std::size_t>(i)]; }
  Index num_coords() const { return static_cast<Index>(factors_->size()); }

  bool is_canonical() const;
  /// Invariant-factor form of the same abstract group.
  AbGroup canonical() const;
  bool is_trivial() const;
  bool is_finite() const;
  bool is_torsion_coord(Index i) const { return !factor(i).is_zero(); }
  Index free_rank() const;
  /// |G|, or nullopt for infinite groups.
  std::optional<Integer> order() const;

  /// Direct sum with coordinates of *this first.
  AbGroup direct_sum(const AbGroup& other) const;
  /// `copies` copies of *this laid out consecutively.
  AbGroup repeat(std::uint64_t copies) const;

  /// Reduces every torsion coordinate into [0, d).
  IntVector reduce(IntVector coords) const;
  Integer reduce_coord(Index i, const Integer& x) const;

  /// "0", "Z", "Z/2 + Z/4 + Z^2" style text of the canonical form.
  std::string to_string() const;

  friend bool operator==(const AbGroup& a, const AbGroup& b) { return a.factors() == b.factors(); }

 private:
  struct Unchecked {};
  AbGroup(std::vector<Integer> factors, Unchecked);
  std::shared_ptr<const std::vector<Integer>> factors_;
};

/// Raw coordinate moduli, e.g. [2, 4, 0].
std::ostream& operator<<(std::ostream& os, const AbGroup& a);

/// Same abstract group (equal invariant factors).
bool isomorphic(const AbGroup& a, const AbGroup& b);

class AbElement {
 public:
  AbElement(AbGroup parent, IntVector coords);
  static AbElement zero(const AbGroup& parent);

  const AbGroup& parent() const { return parent_; }
  const IntVector& coords() const { return coords_; }
  bool is_zero() const;

  friend AbElement operator+(const AbElement& a, const AbElement& b);
  friend AbElement operator-(const AbElement& a, const AbElement& b);
  friend AbElement operator*(const Integer& k, const AbElement& a);
  AbElement operator-() const;
  friend bool operator==(const AbElement& a, const AbElement& b);

 private:
  AbGroup parent_;
  IntVector coords_;
};

/// 1 for the identity, 0 for elements of infinite order.
Integer element_order(const AbElement& x);

/// A homomorphism between coordinate presentations, stored as a sparse
/// target x source matrix whose entries are reduced modulo the target's
/// torsion moduli.
class AbHom {
 public:
  /// Throws InvalidArgument on a shape mismatch and NotWellDefined when a
  /// source relation is not mapped to zero.
  AbHom(AbGroup source, AbGroup target, SparseIntMatrix matrix);
  AbHom(AbGroup source, AbGroup target, const IntMatrix& matrix);

  static AbHom identity(const AbGroup& a);
  static AbHom zero(const AbGroup& source, const AbGroup& target);
  /// k * identity.
  static AbHom multiplication(const AbGroup& a, const Integer& k);

  const AbGroup& source() const { return source_; }
  const AbGroup& target() const { return target_; }
  const SparseIntMatrix& matrix() const { return *matrix_; }
  IntMatrix dense() const { return to_dense(*matrix_); }

  AbElement operator()(const AbElement& x) const;
  IntVector apply(const IntVector& x) const;
  bool is_zero() const { return matrix_->nonZeros() == 0; }

  friend bool operator==(const AbHom& a, const AbHom& b);
  friend AbHom operator+(const AbHom& a, const AbHom& b);
  friend AbHom operator-(const AbHom& a, const AbHom& b);
  friend AbHom operator*(const Integer& k, const AbHom& a);
  AbHom operator-() const;

 private:
  AbGroup source_;
  AbGroup target_;
  std::shared_ptr<const SparseIntMatrix> matrix_;
};

/// g o f.
AbHom compose(const AbHom& g, const AbHom& f);

/// Reduces each row of `m` modulo the corresponding torsion modulus of `target`.
void reduce_rows(SparseIntMatrix& m, const AbGroup& target);

/// ker(g) / im(f) for A -f-> B -g-> C, with explicit generators and a
/// coordinate function.  Immutable and cheap to copy.
class Subquotient {
 public:
  struct Impl;
  explicit Subquotient(std::shared_ptr<const Impl> impl);

  /// Invariant-factor form.
  const AbGroup& group() const;
  /// B.
  const AbGroup& ambient() const;
  /// One column per factor of group(): a cycle in B representing the
  /// corresponding generator, reduced in B.
  const IntMatrix& generators() const;
  /// Class of the cycle x in group() coordinates.  Throws InvalidArgument
  /// when g(x) != 0.
  IntVector coordinates(const IntVector& x) const;
  /// Coordinates of every column of `cycles` (B x m), as a group() x m matrix.
  IntMatrix coordinates(const IntMatrix& cycles) const;
  /// True iff g(x) == 0.
  bool is_cycle(const IntVector& x) const;

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Which elimination backs homology(): `automatic` works over Z/M when B is
/// finite and M (the lcm of all moduli involved) is below 2^31, otherwise
/// over Z.  `exact` always works over Z.
enum class Engine { automatic, exact };

/// Checks g o f == 0 (CompositionNotZero otherwise) and computes ker g / im f.
Subquotient homology(const AbHom& f, const AbHom& g, Engine engine = Engine::automatic);
AbGroup homology_at(const AbHom& f, const AbHom& g);

struct KernelResult {
  AbGroup group;
  AbHom inclusion;  // group -> f.source()
};
KernelResult hom_kernel(const AbHom& f);

struct ImageResult {
  AbGroup group;
  AbHom inclusion;  // group -> f.target()
};
ImageResult image(const AbHom& f);

struct CokernelResult {
  AbGroup group;
  AbHom projection;  // f.target() -> group
};
CokernelResult cokernel(const AbHom& f);

/// Some x in g.source() with g(x) == c, or nullopt.
std::optional<IntVector> solve(const AbHom& g, const IntVector& c, Engine engine = Engine::automatic);

}  // namespace symcoh

#endif  // SYMCOH_ABELIAN_HPP
