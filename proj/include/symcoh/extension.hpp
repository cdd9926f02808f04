#ifndef SYMCOH_EXTENSION_HPP
#define SYMCOH_EXTENSION_HPP

#include "symcoh/cochain.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace symcoh {

/// Enumerates a finite AbGroup: mixed radix over its coordinates, first
/// coordinate most significant.  InfiniteBase for infinite groups.
class ElementIndex {
 public:
  explicit ElementIndex(AbGroup group);
  const AbGroup& group() const { return group_; }
  int size() const { return size_; }
  int index(const IntVector& coords) const;  // coords need not be reduced
  IntVector element(int index) const;

 private:
  AbGroup group_;
  std::vector<int> radix_;
  int size_ = 1;
};

/// 0 -> A -i-> X -pi-> G -> 0 with X a multiplication table.
struct Extension {
  FinGroup X;
  GModule A;
  std::vector<int> i;   // element index of A -> element of X
  std::vector<int> pi;  // element of X -> element of G
};

/// i injective homomorphism onto ker pi, pi surjective homomorphism,
/// |X| = |A||G|, and conjugation by any lift of g acting on i(A) as g does.
bool satisfies_extension_axioms(const Extension& e);

/// A set map t: G -> X with pi t = id (InvalidArgument otherwise).
class Section {
 public:
  Section(Extension extension, std::vector<int> t);
  const Extension& extension() const { return extension_; }
  const std::vector<int>& t() const { return t_; }
  int operator()(int g) const { return t_[static_cast<std::size_t>(g)]; }

 private:
  Extension extension_;
  std::vector<int> t_;
};

/// X = A x G with (a,g)(b,h) = (a + g b + s(g,h), gh).  X's identity is
/// (-s(e,e), e); the pair (a,g) gets index idx(a + s(e,e)) |G| + g so that it
/// sits at 0.  InfiniteBase, NotACocycle, InvalidArgument for degree != 2.
Extension extension_from_cocycle(const Cochain& sigma);

/// s(g,h) = i^-1(t(g) t(h) t(gh)^-1).
Cochain cocycle_from_section(const Section& t);

/// t(g^-1) = t(g)^-1 for every g.
bool is_symmetric_section(const Section& t);

/// Searches all sections; the witness takes the smallest admissible X
/// element in each fibre.  EnumerationGuardError when |A|^|G| exceeds the
/// enumeration cap.
std::pair<bool, std::optional<Section>> has_symmetric_section(const Extension& e);

/// s(g,h) = -g s(g^-1, gh) = -s(gh, h^-1) for all g, h.
bool is_symmetric_cocycle(const Cochain& sigma);

struct ExtensionClass {
  IntVector coordinates;  // in the invariant factors of H^2
  Cochain representative;
  bool symmetric_cocycle = false;
  /// In the image of HS^2 -> H^2.
  bool in_symmetric_image = false;
  std::optional<Section> witness;
};

struct ExtensionReport {
  AbGroup h2;
  std::vector<ExtensionClass> classes;  // sorted by coordinates
};

/// Every class of H^2(G, A) for finite A, with the extension it defines.
/// The representative is the cocycle of the symmetric witness when there is
/// one, otherwise the canonical generator combination.
ExtensionReport extension_report(const GModule& a);

}  // namespace symcoh

#endif  // SYMCOH_EXTENSION_HPP
