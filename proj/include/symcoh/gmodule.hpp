#ifndef SYMCOH_GMODULE_HPP
#define SYMCOH_GMODULE_HPP

#include "symcoh/abelian.hpp"
#include "symcoh/fingroup.hpp"

#include <string_view>
#include <vector>

namespace symcoh {

/// An abelian group with a G-action by automorphisms, one matrix per element.
class GModule {
 public:
  /// Validates: one well-defined automorphism per element (NotInvertible),
  /// identity at e and action(g) o action(h) == action(gh) (NotAHomomorphism).
  GModule(FinGroup group, AbGroup base, std::vector<AbHom> action);

  const FinGroup& group() const { return group_; }
  const AbGroup& base() const { return base_; }
  const AbHom& action(int g) const { return action_[static_cast<std::size_t>(g)]; }
  /// Number of coordinates of the base.
  Index rank() const { return base_.num_coords(); }
  bool is_trivial() const { return trivial_; }

 private:
  FinGroup group_;
  AbGroup base_;
  std::vector<AbHom> action_;
  bool trivial_;
};

GModule trivial_module(const FinGroup& g, const AbGroup& a);
/// Throws InvalidArgument on a wrong count or shape, NotWellDefined when a
/// matrix is not a hom of `a`, NotInvertible, NotAHomomorphism.
GModule module_from_matrices(const FinGroup& g, const AbGroup& a, const std::vector<IntMatrix>& mats);

AbElement act(const GModule& m, int g, const AbElement& a);

/// `trivial:Z`, `trivial:Z/<m>`, `trivial:Z^<r>` and sums of those joined by
/// `+`; the "trivial:" prefix may be given once for the whole sum.  The base
/// is put in invariant-factor form.
GModule parse_module_spec(const FinGroup& g, std::string_view spec);

}  // namespace symcoh

#endif  // SYMCOH_GMODULE_HPP
