#include <doctest.h>

#include <random>

#include "pregd/conformal.hpp"
#include "pregd/constructions.hpp"
#include "pregd/error.hpp"
#include "pregd/identities.hpp"
#include "support/fixtures.hpp"

using namespace pregd;
using namespace pregd::testing;

namespace {

bool same_tensors(AlgebraSpec const &a, AlgebraSpec const &b)
{
	auto x = a, y = b;
	x.set_name("");
	y.set_name("");
	return x == y;
}

bool passes(AlgebraSpec const &alg, Identity id, std::optional<LinearMapSpec> const &aux = std::nullopt)
{
	return check_identity(alg, id, aux).passed;
}

// Window i+j+k <= N over the degrees x^i -> i.
AlgebraSpec restricted(AlgebraSpec alg)
{
	Truncation tr;
	for (std::size_t i = 1; i <= alg.dim(); ++i)
		tr.degree.push_back(static_cast<int>(i));
	tr.min_degree = 1;
	tr.max_degree = static_cast<int>(alg.dim());
	alg.set_truncation(tr);
	return alg;
}

LinearMapSpec conjugate(LinearMapSpec const &D, Matrix const &p)
{
	return LinearMapSpec{inverse(p) * D.matrix * p};
}

} // namespace

TEST_CASE("binomial Zinbiel products")
{
	auto [z2, d2] = truncated_binomial_zinbiel(2);
	CHECK(z2.basis_product(Op::dot, 0, 0) == vec({0, 1}));

	auto [z4, d4] = truncated_binomial_zinbiel(4);
	CHECK(z4.basis_product(Op::dot, 0, 1) == vec({0, 0, 2, 0}));
	CHECK(z4.basis_product(Op::dot, 1, 0) == vec({0, 0, 1, 0}));
	CHECK(z4.basis_product(Op::dot, 1, 2) == vec({0, 0, 0, 0}));
	CHECK(d4.matrix(2, 2) == 3);

	// x1·(x1·x1) = 2x3 = (x1·x1 + x1·x1)·x1
	auto x1 = unit_vector(4, 0);
	CHECK(eval(z4, Op::dot, x1, eval(z4, Op::dot, x1, x1)) == vec({0, 0, 2, 0}));

	for (std::size_t n : {1, 2, 3, 4, 6, 8})
	{
		auto [z, d] = truncated_binomial_zinbiel(n);
		auto narrow = restricted(z);
		CHECK(passes(narrow, Identity::zinbiel));
		CHECK(passes(narrow, Identity::derivation, d));
		CHECK(passes(z, Identity::zinbiel));
		CHECK(passes(z, Identity::derivation, d));
	}
	CHECK_THROWS_AS(truncated_binomial_zinbiel(0), DimensionMismatch);
}

TEST_CASE("Zinbiel to pre-Novikov")
{
	auto zero = zero_algebra(3);
	zero.set(Op::dot, StructureTensor(3));
	auto pn = zinbiel_to_pre_novikov(zero, LinearMapSpec{Matrix::identity(3)}, 5);
	CHECK(pn.is_zero());

	for (std::size_t n : {4, 6})
		for (Scalar xi : {Scalar(0), Scalar(1, 2)})
		{
			auto [z, d] = truncated_binomial_zinbiel(n);
			auto out = zinbiel_to_pre_novikov(z, d, xi);
			CHECK(passes(out, Identity::pre_novikov));
			CHECK_FALSE(out.is_zero());
		}

	// Not Zinbiel: x·x = x.
	AlgebraSpec unit("u", {"x"});
	unit.set_product(Op::dot, 0, 0, vec({1}));
	CHECK_THROWS_AS(zinbiel_to_pre_novikov(unit, LinearMapSpec{Matrix(1, 1)}, 0), IdentityError);

	// Not a derivation.
	auto [z4, d4] = truncated_binomial_zinbiel(4);
	CHECK_THROWS_AS(zinbiel_to_pre_novikov(z4, LinearMapSpec{Matrix::identity(4)}, 0), IdentityError);
	CHECK_THROWS_AS(zinbiel_to_pre_novikov(z4, LinearMapSpec{Matrix::identity(3)}, 0), DimensionMismatch);
}

TEST_CASE("pre-Novikov to pre-GD")
{
	AlgebraSpec one("one", {"L"});
	one.set_product(Op::ld, 0, 0, vec({1}));
	auto g = pre_novikov_to_pre_gd(one, -1);
	CHECK(g.basis_product(Op::circ, 0, 0) == vec({1}));
	CHECK(is_pre_gd(g));

	auto k0 = pre_novikov_to_pre_gd(simple_pre_novikov_2(), 0);
	CHECK(k0.tensor(Op::circ)->is_zero());
	CHECK(same_tensors(k0, simple_pre_novikov_2()));

	auto zero = zero_algebra(2);
	CHECK(pre_novikov_to_pre_gd(zero, 7).is_zero());

	CHECK_THROWS_AS(pre_novikov_to_pre_gd(rd_only(), 1), IdentityError);
}

TEST_CASE("Zinbiel to pre-GD equals the composition")
{
	for (std::size_t n : {3, 4, 6})
		for (Scalar xi : {Scalar(0), Scalar(1, 2), Scalar(-2)})
			for (Scalar k : {Scalar(0), Scalar(1), Scalar(-3)})
			{
				auto [z, d] = truncated_binomial_zinbiel(n);
				auto direct = zinbiel_to_pre_gd(z, d, xi, k);
				auto composed = pre_novikov_to_pre_gd(zinbiel_to_pre_novikov(z, d, xi), k);
				CHECK(same_tensors(direct, composed));
				CHECK(passes(direct, Identity::pre_gd_compat));
			}

	auto [z, d] = truncated_binomial_zinbiel(3);
	CHECK(zinbiel_to_pre_gd(z, d, 0, 0).tensor(Op::circ)->is_zero());
}

TEST_CASE("composition consistency on random Zinbiel inputs")
{
	std::mt19937 rng(23);
	std::uniform_int_distribution<std::size_t> size(2, 5);
	for (int t = 0; t < 20; ++t)
	{
		auto [z, d] = truncated_binomial_zinbiel(size(rng));
		auto p = random_invertible(rng, z.dim());
		auto zr = change_basis(z, p);
		auto dr = conjugate(d, p);
		Scalar xi = small_rational(rng), k = small_rational(rng);
		auto direct = zinbiel_to_pre_gd(zr, dr, xi, k);
		auto composed = pre_novikov_to_pre_gd(zinbiel_to_pre_novikov(zr, dr, xi), k);
		CHECK(same_tensors(direct, composed));
	}
}

TEST_CASE("LS-Poisson to pre-GD")
{
	AlgebraSpec poisson("rank-one", {"L"});
	poisson.set_product(Op::dot, 0, 0, vec({1}));
	poisson.set_product(Op::circ, 0, 0, vec({2}));
	CHECK(same_tensors(ls_poisson_to_pre_gd(poisson), build_rank_one(2)));

	CHECK(ls_poisson_to_pre_gd(zero_algebra(2)).is_zero());

	auto [lau, d] = laurent_slice(1);
	auto np = comm_assoc_derivation_to_novikov_poisson(lau, d);
	auto pg = ls_poisson_to_pre_gd(np);
	CHECK(check_identity(pg, Identity::pre_gd).passed);
	for (std::size_t a = 0; a < pg.dim(); ++a)
		for (std::size_t b = 0; b < pg.dim(); ++b)
			CHECK(pg.basis_product(Op::star, a, b) == np.basis_product(Op::dot, a, b));

	AlgebraSpec nc("nc", {"a", "b"});
	nc.set_product(Op::dot, 0, 1, vec({1, 0}));
	CHECK_THROWS_AS(ls_poisson_to_pre_gd(nc), IdentityError);
}

TEST_CASE("commutative associative algebra with derivation to Novikov-Poisson")
{
	auto [lau, d] = laurent_slice(1);
	auto np = comm_assoc_derivation_to_novikov_poisson(lau, d);
	CHECK(passes(np, Identity::novikov_poisson));
	// t^i ∘ t^j = j t^{i+j}
	for (int i = -1; i <= 1; ++i)
		for (int j = -1; j <= 1; ++j)
		{
			auto expect = zero_vector(3);
			if (i + j >= -1 && i + j <= 1)
				expect[static_cast<std::size_t>(i + j + 1)] = j;
			CHECK(np.basis_product(Op::circ, static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1)) ==
			      expect);
		}

	auto zero_d = comm_assoc_derivation_to_novikov_poisson(lau, LinearMapSpec{Matrix(3, 3)});
	CHECK(zero_d.tensor(Op::circ)->is_zero());

	AlgebraSpec unital("k", {"1"});
	unital.set_product(Op::dot, 0, 0, vec({1}));
	auto u = comm_assoc_derivation_to_novikov_poisson(unital, LinearMapSpec{Matrix(1, 1)});
	CHECK(u.tensor(Op::circ)->is_zero());
	CHECK(passes(u, Identity::novikov_poisson));

	CHECK_THROWS_AS(comm_assoc_derivation_to_novikov_poisson(unital, LinearMapSpec{Matrix::identity(1)}),
	                IdentityError);

	auto [wide, dw] = laurent_slice(3);
	CHECK(passes(comm_assoc_derivation_to_novikov_poisson(wide, dw), Identity::novikov_poisson));
}

TEST_CASE("construction outputs are left-symmetric conformal algebras")
{
	for (std::size_t n : {3, 4})
	{
		auto [z, d] = truncated_binomial_zinbiel(n);
		auto g = zinbiel_to_pre_gd(z, d, Scalar(1, 2), 1);
		CHECK(check_conformal_left_symmetry(g).passed);
	}
}

TEST_CASE("a ξ(a·b - b·a) term in ∘ breaks the compatibility identities")
{
	auto [z, d] = truncated_binomial_zinbiel(3);
	Scalar const xi(1, 2);
	auto out = zinbiel_to_pre_novikov(z, d, xi);
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t j = 0; j < 3; ++j)
		{
			auto a = unit_vector(3, i), b = unit_vector(3, j);
			auto dot = [&](Vector const &x, Vector const &y) { return eval(z, Op::dot, x, y); };
			out.set_product(Op::circ, i, j, dot(a, d(b)) - dot(d(a), b) + xi * (dot(a, b) - dot(b, a)));
		}
	CHECK_FALSE(check_identity(out, Identity::pre_gd_compat).passed);
}
