#pragma once

// Finite-dimensional algebras with several binary operations, given by
// rational structure constants.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pregd/linalg.hpp"

namespace pregd {

/// Stored operations (ld = ◁, rd = ▷, circ = ∘, dot = ·) followed by the
/// derived ones, which are computed on demand and never stored:
///   ast     a*b   = a◁b + a▷b
///   star    a⋆b   = a▷b + b◁a
///   bracket [a,b] = a∘b - b∘a
enum class Op
{
	ld,
	rd,
	circ,
	dot,
	ast,
	star,
	bracket
};

inline constexpr std::array<Op, 4> stored_ops = {Op::ld, Op::rd, Op::circ, Op::dot};

bool is_stored(Op op);
std::string_view op_name(Op op);
/// Accepts the names produced by op_name. Throws UnknownOp.
Op parse_op(std::string_view name);

/// c(i,j,k) is the coefficient of e_k in e_i op e_j.
class StructureTensor
{
  public:
	StructureTensor() = default;
	explicit StructureTensor(std::size_t dim) : dim_(dim), c_(dim * dim * dim, Scalar(0)) {}

	std::size_t dim() const { return dim_; }
	Scalar &operator()(std::size_t i, std::size_t j, std::size_t k)
	{
		return c_[(i * dim_ + j) * dim_ + k];
	}
	Scalar const &operator()(std::size_t i, std::size_t j, std::size_t k) const
	{
		return c_[(i * dim_ + j) * dim_ + k];
	}
	bool is_zero() const;

	friend bool operator==(StructureTensor const &, StructureTensor const &) = default;

  private:
	std::size_t dim_ = 0;
	std::vector<Scalar> c_;
};

/// Finite basis-degree window for algebras that are finite slices of graded
/// infinite-dimensional ones (products leaving the slice were set to zero).
/// Identity checks only visit tuples whose partial degree sums stay inside
/// [min_degree, max_degree], where the truncated products are the true ones.
struct Truncation
{
	std::vector<int> degree; // degree of each basis element
	int min_degree = 0;
	int max_degree = 0;

	friend bool operator==(Truncation const &, Truncation const &) = default;
};

/// A linear map V -> V in coordinates: image of x is matrix.apply(x), so
/// column j holds the image of e_j.
struct LinearMapSpec
{
	Matrix matrix;

	Vector operator()(Vector const &x) const { return matrix.apply(x); }
	friend bool operator==(LinearMapSpec const &, LinearMapSpec const &) = default;
};

class AlgebraSpec
{
  public:
	AlgebraSpec() = default;
	/// Throws ParseError when basis labels repeat.
	AlgebraSpec(std::string name, std::vector<std::string> basis);

	std::string const &name() const { return name_; }
	void set_name(std::string name) { name_ = std::move(name); }
	std::size_t dim() const { return basis_.size(); }
	std::vector<std::string> const &basis() const { return basis_; }
	std::optional<std::size_t> index_of(std::string_view label) const;

	/// Whether a stored op carries a tensor. Absent ops are identically zero.
	bool has(Op op) const;
	StructureTensor const *tensor(Op op) const;
	/// Throws DimensionMismatch on shape errors, UnknownOp for derived ops.
	void set(Op op, StructureTensor t);
	void erase(Op op);
	/// Mutable access; creates a zero tensor when absent.
	StructureTensor &tensor_mut(Op op);
	void set_product(Op op, std::size_t i, std::size_t j, Vector const &value);

	/// e_i op e_j, including derived ops.
	Vector basis_product(Op op, std::size_t i, std::size_t j) const;
	/// Left multiplication x -> e_i op x as a dim x dim matrix.
	Matrix left_mult(Op op, std::size_t i) const;
	/// Right multiplication x -> x op e_i.
	Matrix right_mult(Op op, std::size_t i) const;

	/// True when every stored tensor is zero.
	bool is_zero() const;

	std::optional<Truncation> const &truncation() const { return truncation_; }
	void set_truncation(std::optional<Truncation> t);

	/// Representation equality: same name, basis, truncation and the same
	/// nonzero tensors (an explicitly stored zero tensor equals an absent one).
	friend bool operator==(AlgebraSpec const &a, AlgebraSpec const &b);

  private:
	std::string name_;
	std::vector<std::string> basis_;
	std::map<Op, StructureTensor> ops_;
	std::optional<Truncation> truncation_;
};

/// Bilinear extension: sum_ij x_i y_j (e_i op e_j). Throws DimensionMismatch.
Vector eval(AlgebraSpec const &alg, Op op, Vector const &x, Vector const &y);

/// Matrix of a linear map given by its values on basis vectors.
LinearMapSpec linear_map_from_images(std::vector<Vector> const &images);

} // namespace pregd
