#include "pregd/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

#include "pregd/error.hpp"

namespace pregd {

namespace {

bool all_digits(std::string_view s)
{
	return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
		return std::isdigit(c) != 0;
	});
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
	std::string_view body = text;
	bool negative = false;
	if (!body.empty() && body.front() == '-')
	{
		negative = true;
		body.remove_prefix(1);
	}
	auto slash = body.find('/');
	auto num = body.substr(0, slash);
	auto den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
	if (!all_digits(num) || !all_digits(den))
		throw ParseError("", "malformed rational '" + std::string(text) + "'");
	mpz_class n(std::string(num), 10);
	mpz_class d(std::string(den), 10);
	if (d == 0)
		throw ParseError("", "zero denominator in '" + std::string(text) + "'");
	Scalar r(negative ? mpz_class(-n) : n, d);
	r.canonicalize();
	return r;
}

std::string to_string(Scalar const &x) { return x.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i)
{
	auto v = zero_vector(n);
	v.at(i) = 1;
	return v;
}

bool is_zero(Vector const &v)
{
	return std::all_of(v.begin(), v.end(), [](Scalar const &x) { return x == 0; });
}

void axpy(Vector &y, Scalar const &a, Vector const &x)
{
	if (y.size() != x.size())
		throw DimensionMismatch("axpy: vector lengths differ");
	if (a == 0)
		return;
	for (std::size_t i = 0; i < y.size(); ++i)
		if (x[i] != 0)
			y[i] += a * x[i];
}

Vector operator+(Vector a, Vector const &b)
{
	axpy(a, 1, b);
	return a;
}

Vector operator-(Vector a, Vector const &b)
{
	axpy(a, -1, b);
	return a;
}

Vector operator-(Vector a)
{
	for (auto &x : a)
		x = -x;
	return a;
}

Vector operator*(Scalar const &s, Vector a)
{
	for (auto &x : a)
		x *= s;
	return a;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0))
{}

Matrix Matrix::identity(std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<Vector const> rows)
{
	Matrix m(0, cols);
	for (auto const &r : rows)
		m.append_row(r);
	return m;
}

Vector Matrix::row(std::size_t i) const
{
	return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::apply(Vector const &x) const
{
	if (x.size() != cols_)
		throw DimensionMismatch("matrix-vector product: length mismatch");
	auto y = zero_vector(rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j)
			if ((*this)(i, j) != 0 && x[j] != 0)
				y[i] += (*this)(i, j) * x[j];
	return y;
}

Matrix Matrix::transpose() const
{
	Matrix t(cols_, rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j)
			t(j, i) = (*this)(i, j);
	return t;
}

bool Matrix::is_zero() const
{
	return std::all_of(data_.begin(), data_.end(), [](Scalar const &x) { return x == 0; });
}

void Matrix::append_rows(Matrix const &other)
{
	if (other.cols_ != cols_)
		throw DimensionMismatch("append_rows: column counts differ");
	data_.insert(data_.end(), other.data_.begin(), other.data_.end());
	rows_ += other.rows_;
}

void Matrix::append_row(Vector const &r)
{
	if (r.size() != cols_)
		throw DimensionMismatch("append_row: row length differs from column count");
	data_.insert(data_.end(), r.begin(), r.end());
	++rows_;
}

Matrix operator*(Matrix const &a, Matrix const &b)
{
	if (a.cols_ != b.rows_)
		throw DimensionMismatch("matrix product: inner dimensions differ");
	Matrix c(a.rows_, b.cols_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k)
		{
			auto const &aik = a(i, k);
			if (aik == 0)
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				if (b(k, j) != 0)
					c(i, j) += aik * b(k, j);
		}
	return c;
}

Matrix operator+(Matrix const &a, Matrix const &b)
{
	if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
		throw DimensionMismatch("matrix sum: shapes differ");
	Matrix c = a;
	for (std::size_t i = 0; i < c.data_.size(); ++i)
		c.data_[i] += b.data_[i];
	return c;
}

Matrix operator-(Matrix const &a, Matrix const &b) { return a + Scalar(-1) * b; }

Matrix operator*(Scalar const &s, Matrix const &a)
{
	Matrix c = a;
	for (auto &x : c.data_)
		x *= s;
	return c;
}

// ---------------------------------------------------------------- elimination

EchelonForm row_reduce(Matrix const &m)
{
	std::size_t const rows = m.rows();
	std::size_t const cols = m.cols();

	// Scale every row to integers.
	std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
	for (std::size_t i = 0; i < rows; ++i)
	{
		mpz_class l = 1;
		for (std::size_t j = 0; j < cols; ++j)
			if (m(i, j) != 0)
				mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
		for (std::size_t j = 0; j < cols; ++j)
			a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
	}

	// Bareiss forward elimination. Every entry below the current pivot row
	// stays a minor of the scaled input, so the division by the previous
	// pivot is exact.
	std::vector<std::size_t> pivots;
	mpz_class prev = 1;
	std::size_t r = 0;
	for (std::size_t c = 0; c < cols && r < rows; ++c)
	{
		std::size_t p = r;
		while (p < rows && a[p][c] == 0)
			++p;
		if (p == rows)
			continue;
		std::swap(a[p], a[r]);
		for (std::size_t i = r + 1; i < rows; ++i)
		{
			for (std::size_t j = c + 1; j < cols; ++j)
			{
				mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
				mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
			}
			a[i][c] = 0;
		}
		prev = a[r][c];
		pivots.push_back(c);
		++r;
	}

	// Back substitution in Q.
	std::vector<Vector> red(r, Vector(cols));
	for (std::size_t i = 0; i < r; ++i)
	{
		for (std::size_t j = 0; j < cols; ++j)
			red[i][j] = Scalar(a[i][j]);
		Scalar inv = 1 / red[i][pivots[i]];
		for (auto &x : red[i])
			if (x != 0)
				x *= inv;
	}
	for (std::size_t i = r; i-- > 0;)
		for (std::size_t k = 0; k < i; ++k)
		{
			Scalar f = red[k][pivots[i]];
			if (f != 0)
				axpy(red[k], -f, red[i]);
		}

	return EchelonForm{Matrix::from_rows(cols, red), std::move(pivots)};
}

std::size_t rank(Matrix const &m) { return row_reduce(m).pivots.size(); }

Subspace nullspace(Matrix const &m)
{
	std::size_t const n = m.cols();
	auto ech = row_reduce(m);
	std::vector<bool> is_pivot(n, false);
	for (auto p : ech.pivots)
		is_pivot[p] = true;

	std::vector<Vector> basis;
	for (std::size_t f = 0; f < n; ++f)
	{
		if (is_pivot[f])
			continue;
		auto v = unit_vector(n, f);
		for (std::size_t i = 0; i < ech.pivots.size(); ++i)
			v[ech.pivots[i]] = -ech.reduced(i, f);
		basis.push_back(std::move(v));
	}
	return Subspace::span(n, basis);
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(std::size_t ambient_dim)
{
	Subspace s;
	s.ambient_ = ambient_dim;
	return s;
}

Subspace Subspace::full(std::size_t ambient_dim)
{
	Subspace s;
	s.ambient_ = ambient_dim;
	for (std::size_t i = 0; i < ambient_dim; ++i)
	{
		s.basis_.push_back(unit_vector(ambient_dim, i));
		s.pivots_.push_back(i);
	}
	return s;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<Vector const> vectors)
{
	for (auto const &v : vectors)
		if (v.size() != ambient_dim)
			throw DimensionMismatch("span: vector length differs from ambient dimension");
	auto ech = row_reduce(Matrix::from_rows(ambient_dim, vectors));
	Subspace s;
	s.ambient_ = ambient_dim;
	for (std::size_t i = 0; i < ech.pivots.size(); ++i)
		s.basis_.push_back(ech.reduced.row(i));
	s.pivots_ = std::move(ech.pivots);
	return s;
}

Vector Subspace::reduce(Vector v) const
{
	if (v.size() != ambient_)
		throw DimensionMismatch("reduce: vector length differs from ambient dimension");
	for (std::size_t i = 0; i < basis_.size(); ++i)
	{
		Scalar f = v[pivots_[i]];
		if (f != 0)
			axpy(v, -f, basis_[i]);
	}
	return v;
}

std::optional<Vector> Subspace::coordinates(Vector const &v) const
{
	if (v.size() != ambient_)
		throw DimensionMismatch("coordinates: vector length differs from ambient dimension");
	// In RREF the coordinate along basis i is the pivot entry of v.
	Vector coords(basis_.size());
	for (std::size_t i = 0; i < basis_.size(); ++i)
		coords[i] = v[pivots_[i]];
	if (!is_zero(reduce(v)))
		return std::nullopt;
	return coords;
}

bool Subspace::contains(Vector const &v) const { return is_zero(reduce(v)); }

bool Subspace::contains(Subspace const &other) const
{
	if (other.ambient_ != ambient_)
		throw DimensionMismatch("contains: ambient dimensions differ");
	return std::all_of(other.basis_.begin(), other.basis_.end(),
	                   [this](Vector const &v) { return contains(v); });
}

Subspace Subspace::operator+(Subspace const &other) const
{
	if (other.ambient_ != ambient_)
		throw DimensionMismatch("sum: ambient dimensions differ");
	auto all = basis_;
	all.insert(all.end(), other.basis_.begin(), other.basis_.end());
	return span(ambient_, all);
}

std::optional<Vector> solve_membership(Subspace const &sub, Vector const &v)
{
	return sub.coordinates(v);
}

QuotientResult quotient(Subspace const &big, Subspace const &small)
{
	if (big.ambient_dim() != small.ambient_dim())
		throw DimensionMismatch("quotient: ambient dimensions differ");
	if (!big.contains(small))
		throw ContainmentError("quotient: subspace is not contained in the ambient subspace");
	std::vector<Vector> reduced;
	for (auto const &b : big.basis())
		reduced.push_back(small.reduce(b));
	auto complement = Subspace::span(big.ambient_dim(), reduced);
	assert(complement.dim() == big.dim() - small.dim());
	return QuotientResult{big.dim() - small.dim(), complement.basis()};
}

std::size_t quotient_dim(Subspace const &big, Subspace const &small)
{
	return quotient(big, small).dim;
}

} // namespace pregd
