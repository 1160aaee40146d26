#pragma once

// Algebras built from other algebras. Every constructor checks its input
// against the required identities and its output against the promised ones,
// throwing IdentityError on either failure. Truncation metadata is carried
// over from the input.

#include <cstddef>
#include <utility>

#include "pregd/algebra.hpp"

namespace pregd {

/// a◁b = D(b)·a + ξ b·a,  a▷b = a·D(b) + ξ a·b.
/// Requires a Zinbiel `dot` and a derivation D; output passes PRE_NOVIKOV.
AlgebraSpec zinbiel_to_pre_novikov(AlgebraSpec const &zin, LinearMapSpec const &D, Scalar const &xi);

/// Adds a∘b = k(a▷b - b◁a) to a pre-Novikov algebra; output passes the
/// pre-GD suite.
AlgebraSpec pre_novikov_to_pre_gd(AlgebraSpec const &pn, Scalar const &k);

/// ◁ and ▷ as in zinbiel_to_pre_novikov together with
/// a∘b = k(a·D(b) - D(a)·b), computed directly from the Zinbiel product. This
/// is k(a▷b - b◁a); adding a term ξ(a·b - b·a) would break the compatibility
/// identities whenever ξ ≠ 0.
AlgebraSpec zinbiel_to_pre_gd(AlgebraSpec const &zin, LinearMapSpec const &D, Scalar const &xi,
                              Scalar const &k);

/// ◁ = ·, ▷ = 0, ∘ kept. Requires LS_POISSON on (dot, circ).
AlgebraSpec ls_poisson_to_pre_gd(AlgebraSpec const &lsp);

/// x∘y = x·D(y) for a commutative associative `dot` and a derivation D;
/// output passes NOVIKOV_POISSON.
AlgebraSpec comm_assoc_derivation_to_novikov_poisson(AlgebraSpec const &alg, LinearMapSpec const &D);

/// Basis x^1..x^N with x^i·x^j = C(i+j-1, i) x^{i+j} for i+j <= N, else 0,
/// and D(x^i) = i x^i. This is the polynomial Zinbiel algebra modulo the
/// ideal of degrees above N, so it is Zinbiel on all triples.
std::pair<AlgebraSpec, LinearMapSpec> truncated_binomial_zinbiel(std::size_t n);

/// Basis t^-r..t^r with t^i·t^j = t^{i+j} inside the slice and 0 outside,
/// marked truncated to degrees [-r, r], and D(t^i) = i t^i.
std::pair<AlgebraSpec, LinearMapSpec> laurent_slice(std::size_t radius);

} // namespace pregd
