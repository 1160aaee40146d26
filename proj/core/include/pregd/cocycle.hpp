#pragma once

#include <cstddef>
#include <vector>

#include "pregd/linalg.hpp"

namespace pregd {

/// alpha_lambda(a,b) = sum_i lambda^i alpha_i(a,b), with forms[i](a,b) =
/// alpha_i(e_a, e_b).
struct CocycleFamily
{
	std::size_t degree_cap = 0;
	std::vector<Matrix> forms; // degree_cap + 1 square matrices

	static CocycleFamily zero(std::size_t dim, std::size_t degree_cap);

	std::size_t dim() const { return forms.empty() ? 0 : forms.front().rows(); }
	/// alpha_i(x, y); zero for i > degree_cap.
	Scalar value(std::size_t i, Vector const &x, Vector const &y) const;
	bool is_zero() const;

	/// Flattened coordinates: alpha_i(e_a, e_b) sits at
	/// (degree_cap - i) * dim^2 + a * dim + b, so the top degree comes first.
	Vector coordinates() const;
	static CocycleFamily from_coordinates(std::size_t dim, std::size_t degree_cap, Vector const &v);

	/// Same forms seen with a different cap; dropped forms must be zero.
	/// Throws DimensionMismatch otherwise.
	CocycleFamily with_cap(std::size_t degree_cap) const;

	friend bool operator==(CocycleFamily const &, CocycleFamily const &) = default;
};

/// Index of alpha_i(e_a, e_b) in the flattened coordinates.
inline std::size_t cocycle_index(std::size_t dim, std::size_t degree_cap, std::size_t i,
                                 std::size_t a, std::size_t b)
{
	return (degree_cap - i) * dim * dim + a * dim + b;
}

} // namespace pregd
