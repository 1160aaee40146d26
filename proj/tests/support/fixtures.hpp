#pragma once

// Small algebras used across the test suites, built directly from their
// multiplication tables.

#include <random>
#include <string>
#include <vector>

#include "pregd/algebra.hpp"
#include "pregd/linalg.hpp"

namespace pregd::testing {

inline Vector vec(std::initializer_list<long> xs)
{
	Vector v;
	for (long x : xs)
		v.emplace_back(x);
	return v;
}

inline AlgebraSpec zero_algebra(std::size_t dim)
{
	std::vector<std::string> basis;
	for (std::size_t i = 0; i < dim; ++i)
		basis.push_back("e" + std::to_string(i + 1));
	return AlgebraSpec("zero", basis);
}

/// L◁L = L, W◁L = W, L▷W = W, everything else zero.
inline AlgebraSpec lw_quadratic()
{
	AlgebraSpec alg("lw-quadratic", {"L", "W"});
	alg.set_product(Op::ld, 0, 0, vec({1, 0}));
	alg.set_product(Op::ld, 1, 0, vec({0, 1}));
	alg.set_product(Op::rd, 0, 1, vec({0, 1}));
	return alg;
}

/// L◁L = L, W◁L = W, L∘W = W∘L = h L, W∘W = k(L + W), ▷ = 0.
inline AlgebraSpec rank_two(Scalar const &h, Scalar const &k)
{
	AlgebraSpec alg("rank-two", {"L", "W"});
	alg.set_product(Op::ld, 0, 0, vec({1, 0}));
	alg.set_product(Op::ld, 1, 0, vec({0, 1}));
	alg.set_product(Op::circ, 0, 1, Vector{h, 0});
	alg.set_product(Op::circ, 1, 0, Vector{h, 0});
	alg.set_product(Op::circ, 1, 1, Vector{k, k});
	return alg;
}

/// A two-dimensional simple pre-Novikov algebra with nonzero ▷.
inline AlgebraSpec simple_pre_novikov_2()
{
	AlgebraSpec alg("simple-pn-2", {"L", "W"});
	alg.set_product(Op::ld, 0, 0, vec({-2, 0}));
	alg.set_product(Op::ld, 0, 1, vec({2, 0}));
	alg.set_product(Op::ld, 1, 1, vec({0, 2}));
	alg.set_product(Op::ld, 1, 0, vec({0, -2}));
	alg.set_product(Op::rd, 0, 1, vec({2, 2}));
	alg.set_product(Op::rd, 1, 1, vec({-2, -2}));
	return alg;
}

/// One-dimensional algebra with L▷L = L and nothing else.
inline AlgebraSpec rd_only()
{
	AlgebraSpec alg("rd-only", {"L"});
	alg.set_product(Op::rd, 0, 0, vec({1}));
	return alg;
}

/// Small nonzero rational drawn from a fixed menu.
inline Scalar small_rational(std::mt19937 &rng)
{
	static const std::vector<Scalar> menu = {Scalar(1), Scalar(-1), Scalar(2), Scalar(1, 2),
	                                         Scalar(-3), Scalar(2, 3)};
	std::uniform_int_distribution<std::size_t> pick(0, menu.size() - 1);
	return menu[pick(rng)];
}

inline Vector random_vector(std::mt19937 &rng, std::size_t n, int range = 3)
{
	std::uniform_int_distribution<int> num(-range, range);
	std::uniform_int_distribution<int> den(1, 3);
	Vector v(n);
	for (auto &x : v)
	{
		x = Scalar(num(rng), den(rng));
		x.canonicalize();
	}
	return v;
}

/// Sparse random tensors for the listed ops; each entry is nonzero with
/// probability `density`.
inline AlgebraSpec random_algebra(std::mt19937 &rng, std::size_t dim, std::vector<Op> const &ops,
                                  double density = 0.25)
{
	auto alg = zero_algebra(dim);
	alg.set_name("random");
	std::bernoulli_distribution on(density);
	for (Op op : ops)
	{
		auto &t = alg.tensor_mut(op);
		for (std::size_t i = 0; i < dim; ++i)
			for (std::size_t j = 0; j < dim; ++j)
				for (std::size_t k = 0; k < dim; ++k)
					if (on(rng))
						t(i, j, k) = small_rational(rng);
	}
	return alg;
}

/// Random invertible matrix (unit lower times unit upper triangular).
inline Matrix random_invertible(std::mt19937 &rng, std::size_t n)
{
	std::uniform_int_distribution<int> d(-2, 2);
	Matrix lo = Matrix::identity(n), up = Matrix::identity(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < i; ++j)
		{
			lo(i, j) = d(rng);
			up(j, i) = d(rng);
		}
	return lo * up;
}

/// Exact inverse by Gauss-Jordan on [m | I].
inline Matrix inverse(Matrix const &m)
{
	std::size_t const n = m.rows();
	Matrix a(n, 2 * n);
	for (std::size_t i = 0; i < n; ++i)
	{
		for (std::size_t j = 0; j < n; ++j)
			a(i, j) = m(i, j);
		a(i, n + i) = 1;
	}
	auto ech = row_reduce(a);
	Matrix inv(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			inv(i, j) = ech.reduced(i, n + j);
	return inv;
}

/// The same algebra in the basis f_j = sum_i p(i,j) e_i.
inline AlgebraSpec change_basis(AlgebraSpec const &alg, Matrix const &p)
{
	std::size_t const n = alg.dim();
	Matrix const pinv = inverse(p);
	AlgebraSpec out(alg.name() + "-rebased", alg.basis());
	auto column = [&](std::size_t j) {
		Vector v(n);
		for (std::size_t i = 0; i < n; ++i)
			v[i] = p(i, j);
		return v;
	};
	for (Op op : stored_ops)
	{
		if (!alg.has(op))
			continue;
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				out.set_product(op, i, j, pinv.apply(eval(alg, op, column(i), column(j))));
	}
	return out;
}

} // namespace pregd::testing
