#pragma once

// Ideals and simplicity of finite-dimensional multi-operation algebras, and
// sufficient criteria for simplicity of the conformal algebra C[∂]V.
//
// An ideal for an op set is a subspace I with x op v, v op x in I for all
// x in I, v in V and op in the set. "Proper" means neither 0 nor V.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pregd/algebra.hpp"
#include "pregd/linalg.hpp"

namespace pregd {

struct IdealReport
{
	Subspace seed;
	Subspace closure;
	bool is_proper = false;
};

/// Least subspace containing seed that is an ideal for ops. Throws
/// DimensionMismatch if seed lives in the wrong ambient space.
IdealReport ideal_closure(AlgebraSpec const &alg, Subspace const &seed, std::set<Op> const &ops);

/// Whether sub is an ideal for ops (direct check of every product).
bool is_ideal(AlgebraSpec const &alg, Subspace const &sub, std::set<Op> const &ops);

struct IdealSearch
{
	std::optional<Subspace> ideal; // verified proper ideal
	std::size_t envelope_dim = 0;  // dimension of the unital algebra generated by all multiplications
	bool irreducible = false;      // envelope_dim == dim², so no proper ideal exists
	std::vector<std::string> log;
};

/// Looks for a proper ideal: closures of basis vectors and `trials` random
/// vectors, then the associative envelope of the multiplication operators,
/// then kernel probes on envelope elements and their transposes. An empty
/// result with irreducible == false is inconclusive.
IdealSearch search_proper_ideal(AlgebraSpec const &alg, std::set<Op> const &ops, std::size_t trials,
                                std::uint64_t seed);

std::optional<Subspace> find_proper_ideal(AlgebraSpec const &alg, std::set<Op> const &ops, std::size_t trials,
                                          std::uint64_t seed);

enum class Verdict
{
	simple,
	not_simple,
	inconclusive,
};

enum class Criterion
{
	none,
	exhaustive,           // envelope is the full matrix algebra
	counterexample,       // a verified proper ideal (lifted to C[∂]I for the conformal algebra)
	pre_novikov_spanning, // (V,◁,▷) simple and V⋆V = V
	faithful_element,     // ▷ = 0, V simple and some a with a◁b ≠ 0 or b◁a ≠ 0 for all b ≠ 0
	novikov_poisson,      // ▷ = 0 and (V, ◁, ∘) a simple Novikov-Poisson algebra
};

std::string_view verdict_name(Verdict v);
std::string_view criterion_name(Criterion c);

struct SimplicityCertificate
{
	Verdict verdict = Verdict::inconclusive;
	Criterion criterion = Criterion::none;
	std::optional<Subspace> ideal;  // with not_simple
	std::optional<Vector> element;  // with faithful_element
	std::vector<std::string> log;
	std::size_t trials = 0;
	std::uint64_t seed = 0;
};

/// Simplicity of the pre-GD algebra for ops {◁, ▷, ∘}. Throws IdentityError
/// if alg fails the pre-GD suite and TrivialAlgebra if every product vanishes.
SimplicityCertificate is_simple_pre_gd(AlgebraSpec const &alg, std::size_t trials = 16, std::uint64_t seed = 0);

/// Tries, in order: a proper ideal of V (then C[∂]I is a proper ideal of the
/// conformal algebra), simplicity of (V,◁,▷) with V⋆V = V, the faithful
/// element criterion and the Novikov-Poisson criterion. Never claims
/// not_simple without a verified ideal. Errors as is_simple_pre_gd.
SimplicityCertificate certify_conformal_simplicity(AlgebraSpec const &alg, std::size_t trials = 16,
                                                   std::uint64_t seed = 0);

/// Re-checks the hypotheses named by a certificate. Inconclusive
/// certificates always verify.
bool verify_certificate(AlgebraSpec const &alg, SimplicityCertificate const &cert);

/// True iff some basis pair has a▷b ≠ -b◁a.
bool some_pair_breaks_flip(AlgebraSpec const &alg);

/// some_pair_breaks_flip for pre-Novikov algebras certified simple for
/// {◁, ▷}; nullopt when that precondition does not hold. A simple
/// pre-Novikov algebra never has a▷b = -b◁a throughout.
std::optional<bool> check_flip_lemma(AlgebraSpec const &alg, std::size_t trials = 16, std::uint64_t seed = 0);

} // namespace pregd
