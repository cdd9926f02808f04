#ifndef SYMCOH_COCHAIN_HPP
#define SYMCOH_COCHAIN_HPP

#include "symcoh/abelian.hpp"
#include "symcoh/gmodule.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace symcoh {

/// C^n(G, A): functions G^n -> A.  Tuples are ranked lexicographically in
/// element indices (first argument most significant); the value of slot s
/// at tuple rank r sits at coordinate r * k + s, where k is the number of
/// coordinates of A.
class CochainSpace {
 public:
  /// ResourceGuardError when |G|^n * k exceeds the entry cap.
  CochainSpace(GModule module, int degree);

  const GModule& module() const { return module_; }
  const FinGroup& group() const { return module_.group(); }
  int degree() const { return degree_; }
  const AbGroup& space() const { return space_; }
  std::uint64_t num_tuples() const { return tuples_; }
  Index slots() const { return module_.rank(); }
  Index dimension() const { return space_.num_coords(); }

  std::uint64_t tuple_rank(std::span<const int> tuple) const;
  std::vector<int> tuple(std::uint64_t rank) const;
  Index position(std::uint64_t rank, Index slot) const { return static_cast<Index>(rank) * slots() + slot; }

  CochainSpace next() const { return CochainSpace(module_, degree_ + 1); }
  CochainSpace previous() const;

 private:
  GModule module_;
  int degree_;
  std::uint64_t tuples_;
  AbGroup space_;
};

class Cochain {
 public:
  Cochain(CochainSpace space, IntVector values);
  static Cochain zero(const CochainSpace& space);
  /// f(tuple) returns the k coordinates of the value at that tuple.
  static Cochain from_function(const CochainSpace& space, const std::function<IntVector(std::span<const int>)>& f);

  const CochainSpace& space() const { return space_; }
  const IntVector& values() const { return values_; }
  AbElement element() const { return AbElement(space_.space(), values_); }
  /// Value at a tuple, as an element of A.
  AbElement at(std::span<const int> tuple) const;
  bool is_zero() const { return values_.isZero(); }

  friend bool operator==(const Cochain& a, const Cochain& b) { return a.values_ == b.values_; }

 private:
  CochainSpace space_;
  IntVector values_;
};

/// Calls f(rank, tuple) for every tuple of length `length` in rank order.
void for_each_tuple(int group_order, int length, const std::function<void(std::uint64_t, const std::vector<int>&)>& f);

/// d^j : C^n -> C^{n+1}, 0 <= j <= n+1.
AbHom face_map(const CochainSpace& space, int j);
/// Sum of (-1)^j d^j.
AbHom differential(const CochainSpace& space);
/// tau_i : C^n -> C^n, 1 <= i <= n.
AbHom transposition_action(const CochainSpace& space, int i);

/// CS^n: the common fixed points of tau_1..tau_n, with its inclusion into
/// C^n and the coordinate map that expresses invariant cochains in the
/// generators of `group`.
struct InvariantSubspace {
  AbGroup group;
  AbHom inclusion;
  Subquotient lattice;
};
InvariantSubspace invariant_subspace(const CochainSpace& space);

}  // namespace symcoh

#endif  // SYMCOH_COCHAIN_HPP
