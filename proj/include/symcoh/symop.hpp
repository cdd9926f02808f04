#ifndef SYMCOH_SYMOP_HPP
#define SYMCOH_SYMOP_HPP

#include "symcoh/cochain.hpp"
#include "symcoh/report.hpp"

#include <vector>

namespace symcoh {

/// `sign_flipped` replaces every tau_i by -tau_i; used as a negative control.
enum class ActionVariant { standard, sign_flipped };

AbHom transposition_action(const CochainSpace& space, int i, ActionVariant variant);

/// Action of a permutation of the symbols 1..n+1 on C^n.  `perm` is in
/// one-line form: perm[s-1] is the image of symbol s.  Evaluated along a
/// reduced word, so that permutation_action(p o q) = permutation_action(p) *
/// permutation_action(q).
AbHom permutation_action(const CochainSpace& space, const std::vector<int>& perm,
                         ActionVariant variant = ActionVariant::standard);

/// Sum of the actions of all permutations of the symbols first..last.
struct NormOperator {
  int degree = 0;
  int first = 1;
  int last = 1;
  AbHom matrix;
};

/// Built by peeling off coset representatives 1, t_k, t_{k+1}t_k, ...
NormOperator norm_operator(const CochainSpace& space, int first, int last,
                           ActionVariant variant = ActionVariant::standard);
/// The full window 1..n+1.
NormOperator norm_operator(const CochainSpace& space, ActionVariant variant = ActionVariant::standard);
/// Direct sum over all permutations of the window; EnumerationGuardError
/// beyond the enumeration cap.
AbHom norm_operator_by_enumeration(const CochainSpace& space, int first, int last,
                                   ActionVariant variant = ActionVariant::standard);

/// Involutions, braid and far commutation of tau_1..tau_n on C^n, d d = 0
/// out of C^n, and d(CS^n) inside CS^{n+1}.
VerificationReport verify_actions(const CochainSpace& space, ActionVariant variant = ActionVariant::standard);

/// The four families relating tau on C^{n+1}, tau on C^n and the faces
/// d^j : C^n -> C^{n+1}, one check per applicable (i, j).
VerificationReport verify_exchange_relations(const CochainSpace& space,
                                             ActionVariant variant = ActionVariant::standard);

/// (n+2) d S_{n+1} = S_{n+2} d on C^n, plus d S_{n+1} = S_{n+2} d^0 and
/// S_{n+2} d^j = (-1)^j S_{n+2} d^0 for every j.
VerificationReport norm_identity_report(const CochainSpace& space, ActionVariant variant = ActionVariant::standard);
bool verify_norm_identity(const CochainSpace& space);

/// True iff n+1 is injective and n! is bijective on the base of A.
bool injectivity_predicate(const GModule& a, int n);

}  // namespace symcoh

#endif  // SYMCOH_SYMOP_HPP
