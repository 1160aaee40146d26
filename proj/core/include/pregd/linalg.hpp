#pragma once

// Exact linear algebra over the rationals.
//
// Everything here is value-typed and immutable after construction. Scalars are
// GMP rationals, which are always kept in canonical form (positive
// denominator, numerator and denominator coprime).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pregd {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "-3/2", "7", "0". Throws ParseError on anything else (including a
/// zero denominator). The result is canonical.
Scalar parse_scalar(std::string_view text);
std::string to_string(Scalar const &x);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(Vector const &v);
void axpy(Vector &y, Scalar const &a, Vector const &x); // y += a*x

Vector operator+(Vector a, Vector const &b);
Vector operator-(Vector a, Vector const &b);
Vector operator-(Vector a);
Vector operator*(Scalar const &s, Vector a);

/// Dense row-major matrix of rationals.
class Matrix
{
  public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols);
	static Matrix identity(std::size_t n);
	static Matrix from_rows(std::size_t cols, std::span<Vector const> rows);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Scalar &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
	Scalar const &operator()(std::size_t i, std::size_t j) const
	{
		return data_[i * cols_ + j];
	}

	Vector row(std::size_t i) const;
	Vector apply(Vector const &x) const; // this * x
	Matrix transpose() const;
	bool is_zero() const;

	/// Appends rows at the bottom; the column count must match.
	void append_rows(Matrix const &other);
	void append_row(Vector const &r);

	friend Matrix operator*(Matrix const &a, Matrix const &b);
	friend Matrix operator+(Matrix const &a, Matrix const &b);
	friend Matrix operator-(Matrix const &a, Matrix const &b);
	friend Matrix operator*(Scalar const &s, Matrix const &a);
	friend bool operator==(Matrix const &a, Matrix const &b) = default;

  private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Scalar> data_;
};

struct EchelonForm
{
	Matrix reduced;                  // reduced row-echelon form, zero rows dropped
	std::vector<std::size_t> pivots; // pivot column of each row
};

/// Fraction-free (Bareiss) forward elimination on the row-wise integer
/// scaling of `m`, followed by exact back substitution.
EchelonForm row_reduce(Matrix const &m);
std::size_t rank(Matrix const &m);

class Subspace;

/// Canonical basis of {x : m x = 0}.
Subspace nullspace(Matrix const &m);

/// A subspace of Q^n stored by its reduced row-echelon basis, so two
/// subspaces are equal exactly when their representations are equal.
class Subspace
{
  public:
	Subspace() = default;
	static Subspace zero(std::size_t ambient_dim);
	static Subspace full(std::size_t ambient_dim);
	static Subspace span(std::size_t ambient_dim, std::span<Vector const> vectors);
	static Subspace span(std::size_t ambient_dim, std::initializer_list<Vector> vectors)
	{
		return span(ambient_dim, std::span<Vector const>(vectors.begin(), vectors.size()));
	}

	std::size_t ambient_dim() const { return ambient_; }
	std::size_t dim() const { return basis_.size(); }
	std::vector<Vector> const &basis() const { return basis_; }
	std::vector<std::size_t> const &pivots() const { return pivots_; }

	/// Coordinates of v in basis(), or nullopt if v is not in the subspace.
	/// Throws DimensionMismatch if v has the wrong length.
	std::optional<Vector> coordinates(Vector const &v) const;
	bool contains(Vector const &v) const;
	bool contains(Subspace const &other) const;

	/// Normal form of v modulo this subspace: v minus the combination of
	/// basis vectors that clears every pivot column.
	Vector reduce(Vector v) const;

	Subspace operator+(Subspace const &other) const;

	friend bool operator==(Subspace const &a, Subspace const &b) = default;

  private:
	std::size_t ambient_ = 0;
	std::vector<Vector> basis_;
	std::vector<std::size_t> pivots_;
};

/// Solves membership of v in sub; see Subspace::coordinates.
std::optional<Vector> solve_membership(Subspace const &sub, Vector const &v);

struct QuotientResult
{
	std::size_t dim = 0;
	/// Basis of a complement of `small` inside `big`: the basis vectors of
	/// `big` reduced modulo `small`, then row-reduced.
	std::vector<Vector> representatives;
};

/// dim(big / small). Throws ContainmentError if small is not inside big.
QuotientResult quotient(Subspace const &big, Subspace const &small);
std::size_t quotient_dim(Subspace const &big, Subspace const &small);

} // namespace pregd
