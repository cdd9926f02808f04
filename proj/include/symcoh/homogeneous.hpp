#ifndef SYMCOH_HOMOGENEOUS_HPP
#define SYMCOH_HOMOGENEOUS_HPP

#include "symcoh/cochain.hpp"
#include "symcoh/report.hpp"

namespace symcoh {

/// The alternative differential C^n -> C^{n+1}: with arguments g_0..g_n,
/// g_0 s(g_0^-1 g_1, ..., g_0^-1 g_n) + sum_{j>=1} (-1)^j s(g_0..^g_{j-1}..g_n).
AbHom alt_differential(const CochainSpace& space);

/// Change of variables intertwining the two differentials:
/// (j s)(h_1..h_n) = s(h_1, h_1^-1 h_2, ..., h_{n-1}^-1 h_n), so that
/// j d = d~ j.
AbHom j_map(const CochainSpace& space);
/// The inverse substitution (p s)(g_1..g_n) = s(g_1, g_1 g_2, ..., g_1..g_n),
/// which satisfies d p = p d~.
AbHom partial_products_map(const CochainSpace& space);

/// i = 1: -g_1 s(g_1^-1, g_1^-1 g_2, ..., g_1^-1 g_n); i >= 2: minus the swap
/// of arguments i-1 and i.
AbHom alt_transposition_action(const CochainSpace& space, int i);

/// j d = d~ j on C^n, j invertible (both composites with the inverse
/// substitution are the identity), d~ d~ = 0, alt tau involutions, and the
/// informational conjugacy j tau_i = tau~_i j.
VerificationReport verify_remark(const CochainSpace& space);

/// Homology of the alternative complex at degree n.
AbGroup alt_cohomology(const GModule& module, int n);

}  // namespace symcoh

#endif  // SYMCOH_HOMOGENEOUS_HPP
