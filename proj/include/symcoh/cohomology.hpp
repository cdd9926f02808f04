#ifndef SYMCOH_COHOMOLOGY_HPP
#define SYMCOH_COHOMOLOGY_HPP

#include "symcoh/cochain.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace symcoh {

struct CohomologyResult {
  AbGroup group_value;
  int degree = 0;
  bool symmetric = false;
  /// One cocycle per invariant factor, in C^n.
  std::vector<Cochain> representatives;
};

struct ComparisonResult {
  AbHom map;  // HS^n -> H^n, in the generators of the two results
  AbGroup kernel;
  AbGroup image;
};

/// The cochain complex of one module with its invariant subcomplex.  Spaces,
/// operators and homology are built on first use and cached; all accessors
/// are safe to call concurrently.
class CochainComplex {
 public:
  explicit CochainComplex(GModule module);

  const GModule& module() const { return module_; }
  const CochainSpace& space(int n) const;
  /// d_n : C^n -> C^{n+1}; for n = -1 the zero map from the trivial group.
  const AbHom& differential(int n) const;
  const InvariantSubspace& invariants(int n) const;
  /// d_n restricted to CS^n, in the generators of CS^n and CS^{n+1}.
  const AbHom& symmetric_differential(int n) const;
  const Subquotient& cohomology(int n) const;
  /// HS^n as a subquotient of CS^n (in the generators of invariants(n)).
  const Subquotient& symmetric_cohomology(int n) const;

  CohomologyResult result(int n, bool symmetric) const;
  ComparisonResult comparison(int n) const;

 private:
  // d_n o incl_n : CS^n -> C^{n+1}
  const AbHom& restricted_differential(int n) const;

  GModule module_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<int, CochainSpace> spaces_;
  mutable std::map<int, AbHom> differentials_;
  mutable std::map<int, InvariantSubspace> invariants_;
  mutable std::map<int, AbHom> restricted_;
  mutable std::map<int, AbHom> symmetric_differentials_;
  mutable std::map<int, Subquotient> cohomology_;
  mutable std::map<int, Subquotient> symmetric_cohomology_;
};

/// G must be the group of A.
CohomologyResult cohomology(const FinGroup& g, const GModule& a, int n);
CohomologyResult symmetric_cohomology(const FinGroup& g, const GModule& a, int n);
ComparisonResult comparison_map(const FinGroup& g, const GModule& a, int n);

bool is_cocycle(const Cochain& c);

struct CoboundaryResult {
  bool is_coboundary = false;
  /// A preimage under d_{n-1}; absent when none exists or n = 0 (C^{-1} = 0).
  std::optional<Cochain> witness;
};
CoboundaryResult is_coboundary(const Cochain& c);

/// Order of the class of a cocycle in H^n (0 for infinite order), found by
/// coboundary tests on multiples up to `bound`; nullopt when no multiple up
/// to the bound is a coboundary.
std::optional<Integer> class_order(const Cochain& c, const Integer& bound);

}  // namespace symcoh

#endif  // SYMCOH_COHOMOLOGY_HPP
