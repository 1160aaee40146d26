#pragma once

// Identity catalog, representation axioms and associated algebras.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pregd/algebra.hpp"

namespace pregd {

enum class Identity
{
	left_symmetric,
	novikov,
	lie,
	zinbiel,
	comm_assoc,
	derivation,
	pre_novikov,
	gd_compat,
	pre_gd_compat,
	ls_poisson,
	novikov_poisson,
	quadratic_9,
	pre_gd // PRE_NOVIKOV + LEFT_SYMMETRIC(circ) + PRE_GD_COMPAT
};

/// Upper-case catalog name, e.g. "PRE_NOVIKOV".
std::string_view identity_name(Identity id);
/// Case-insensitive; '-' and '_' are interchangeable. Throws UnknownIdentity.
Identity parse_identity(std::string_view name);

/// Which stored or derived op plays the role of a generic product in an
/// identity. Defaults:
///   LEFT_SYMMETRIC, NOVIKOV, LIE          product = circ
///   ZINBIEL, COMM_ASSOC, DERIVATION       product = dot
///   LS_POISSON, NOVIKOV_POISSON           commutative = dot, product = circ
///   GD_COMPAT                             novikov = dot, bracket = circ
/// The pre-algebra identities always use ld, rd and circ.
struct OpSlots
{
	std::optional<Op> product;
	std::optional<Op> commutative;
	std::optional<Op> bracket;
	std::optional<Op> novikov;
};

struct Violation
{
	std::vector<std::size_t> basis; // basis indices of the failing tuple
	std::string equation;
	Vector residual;
	std::string detail; // extra coordinates such as a monomial, may be empty
};

struct IdentityReport
{
	std::string identity_id;
	bool passed = true;
	std::vector<Violation> violations;
	std::size_t checked = 0; // tuples evaluated
	std::size_t skipped = 0; // tuples outside a truncation window

	void add(Violation v)
	{
		passed = false;
		violations.push_back(std::move(v));
	}
	/// Folds another report's violations and counters into this one.
	void merge(IdentityReport const &other);
};

/// Evaluates the identity on every basis tuple. Truncated algebras only visit
/// tuples whose partial degree sums stay inside the window; the others are
/// counted in `skipped`. Throws MissingAuxMap when DERIVATION has no map,
/// DimensionMismatch when the map has the wrong shape.
IdentityReport check_identity(AlgebraSpec const &alg, Identity id,
                              std::optional<LinearMapSpec> const &aux = std::nullopt,
                              OpSlots const &slots = {});

/// True when `alg` passes PRE_NOVIKOV, LEFT_SYMMETRIC(circ) and PRE_GD_COMPAT.
bool is_pre_gd(AlgebraSpec const &alg);

// ---------------------------------------------------------------- representations

/// Maps named "l", "r" and "rho"; each holds one module_dim x module_dim
/// matrix per basis element of the algebra.
struct RepresentationSpec
{
	std::size_t module_dim = 0;
	std::map<std::string, std::vector<Matrix>> maps;

	/// Linear extension of a named map to a coordinate vector.
	Matrix at(std::string const &name, Vector const &x) const;
};

enum class RepKind
{
	novikov,
	gd
};

/// Ops realising the Novikov product and the Lie bracket on the algebra side.
/// The defaults fit a pre-GD algebra; a stored Novikov algebra would pass
/// {Op::circ, ...}.
struct RepSlots
{
	Op novikov = Op::ast;
	Op bracket = Op::bracket;
};

/// Checks the axioms on basis pairs (a,b) and module basis vectors v. A
/// violation's basis is {a, b, v}. Throws MissingMaps when l, r (or rho for
/// gd) are absent or have the wrong count, DimensionMismatch on shapes.
IdentityReport check_representation(AlgebraSpec const &alg, RepresentationSpec const &rep,
                                    RepKind kind, RepSlots const &slots = {});

/// (L_rd, R_ld) and, for gd, rho = L_circ.
RepresentationSpec regular_representation(AlgebraSpec const &alg, RepKind kind);

/// The representation with every map zero.
RepresentationSpec zero_representation(std::size_t alg_dim, std::size_t module_dim, RepKind kind);

/// novikov: a single op circ holding a*b = a◁b + a▷b.
/// gd: dot holds a*b and circ holds [a,b] = a∘b - b∘a.
/// Throws MissingOps when neither ld nor rd is stored.
AlgebraSpec associated(AlgebraSpec const &alg, RepKind which);

} // namespace pregd
