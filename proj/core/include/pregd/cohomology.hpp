#pragma once

// Central extensions of the conformal algebra C[∂]V of a pre-GD algebra by a
// one-dimensional centre C c_β with ∂c_β = βc_β. Cocycle families are
// handled through their flattened coordinates (see cocycle_index).
//
// All operations treat the algebra as the finite-dimensional algebra it
// stores: truncation metadata is ignored and the pre-GD identities must hold
// on every basis triple, otherwise IdentityError is thrown.

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "pregd/algebra.hpp"
#include "pregd/cocycle.hpp"
#include "pregd/linalg.hpp"

namespace pregd {

/// Rows are linear conditions on the (cap+1)·dim² cocycle coordinates: one
/// row per basis triple (a,b,c) and λ^p μ^q monomial of the extended
/// left-symmetry identity, with α_{λ+μ} expanded binomially. Zero rows are
/// dropped.
Matrix generate_cocycle_system(AlgebraSpec const &alg, Scalar const &beta, std::size_t degree_cap);

enum class CocycleVariant
{
	general,     // cap 3, any pre-GD algebra
	pre_novikov, // cap 3, needs ∘ = 0
	ls_poisson,  // cap 2 written in cap-3 coordinates, needs ▷ = 0 and ◁ commutative
};

/// The itemized per-degree equations, as a cross-check of the generated
/// system. Always uses cap-3 coordinates. The ls_poisson variant appends
/// α₃ = 0, which is only a consequence of the other equations when V◁V = V.
/// Throws IdentityError when the variant's shape condition fails.
Matrix hardcoded_cocycle_system(AlgebraSpec const &alg, Scalar const &beta,
                                CocycleVariant variant = CocycleVariant::general);

/// Which variants of hardcoded_cocycle_system apply to alg.
std::vector<CocycleVariant> applicable_variants(AlgebraSpec const &alg);

/// The family induced by φ: α₀(a,b) = βφ(b◁a) + φ(a∘b), α₁(a,b) = φ(a⋆b).
CocycleFamily coboundary(AlgebraSpec const &alg, Scalar const &beta, std::size_t degree_cap,
                         Vector const &phi);

/// Span of coboundary(φ) over a basis of φ. Throws InvalidArgument for cap 0.
Subspace coboundary_space(AlgebraSpec const &alg, Scalar const &beta, std::size_t degree_cap);

struct ExtensionResult
{
	Scalar beta;
	std::size_t degree_cap = 3;
	bool cap_limited = false; // cap supplied by the caller, not implied by a spanning condition
	std::size_t dim_Z2 = 0;
	std::size_t dim_B2 = 0;
	std::size_t dim_H2 = 0;
	std::vector<CocycleFamily> cocycle_basis;
	std::vector<CocycleFamily> representatives;
};

/// Z², B² and a complement of B² in Z². Without a cap, one of the spanning
/// conditions must hold (cap 3 is then exact); otherwise throws
/// SpanningConditionError. With a cap the result is flagged cap_limited.
/// B² ⊆ Z² is checked and a violation raises ContainmentError.
ExtensionResult h2(AlgebraSpec const &alg, Scalar const &beta,
                   std::optional<std::size_t> degree_cap = std::nullopt);

/// The ops among ∗, ⋆, ◁, ▷ whose products span V.
std::set<Op> check_spanning(AlgebraSpec const &alg);

/// Some e with a∗e = a and a◁e = a for every a, if one exists.
std::optional<Vector> find_unit(AlgebraSpec const &alg);

/// For a pre-Novikov algebra (∘ = 0) and β ≠ 0: finds a unit as above and
/// returns whether h2 vanishes. Throws NoUnitFound when there is none,
/// InvalidArgument for β = 0 and IdentityError for inputs that are not
/// pre-Novikov.
bool unital_vanishing_check(AlgebraSpec const &alg, Scalar const &beta);

} // namespace pregd
