#include <doctest.h>

#include <random>

#include "pregd/conformal.hpp"
#include "pregd/error.hpp"
#include "pregd/identities.hpp"
#include "support/fixtures.hpp"

using namespace pregd;
using namespace pregd::testing;

namespace {

std::string product_text(AlgebraSpec const &alg, std::size_t a, std::size_t b)
{
	return format_lambda_poly(lambda_product(alg, ModuleElement::basis(a), ModuleElement::basis(b)), alg);
}

AlgebraSpec one_dim_circ()
{
	AlgebraSpec a("c", {"L"});
	a.set_product(Op::circ, 0, 0, vec({1}));
	return a;
}

} // namespace

TEST_CASE("λ-products of the standard examples")
{
	CHECK(product_text(build_rank_one(1), 0, 0) == "(∂ + λ + 1)·L");
	CHECK(product_text(build_rank_one(Scalar(-1, 2)), 0, 0) == "(∂ + λ - 1/2)·L");
	CHECK(product_text(build_rank_one(0), 0, 0) == "(∂ + λ)·L");
	CHECK(product_text(build_current(one_dim_circ()), 0, 0) == "L");
	CHECK(product_text(lw_quadratic(), 0, 1) == "(∂ + 2λ)·W");
	CHECK(product_text(lw_quadratic(), 0, 0) == "(∂ + λ)·L");
	CHECK(product_text(lw_quadratic(), 1, 1) == "0");

	// (∂L)_λ L = -λ(∂ + λ + c)L
	auto r = build_rank_one(3);
	auto p = lambda_product(r, ModuleElement::basis(0, 1), ModuleElement::basis(0));
	CHECK(format_lambda_poly(p, r) == "(-λ∂ - λ^2 - 3λ)·L");

	// Current algebra products have no ∂ or λ.
	auto cur = build_current(rank_two(1, 1));
	for (std::size_t a = 0; a < 2; ++a)
		for (std::size_t b = 0; b < 2; ++b)
		{
			auto lp = lambda_product(cur, ModuleElement::basis(a), ModuleElement::basis(b));
			for (auto const &[deg, m] : lp.coeffs)
			{
				CHECK(deg == 0);
				for (auto const &[k, c] : m.terms())
					CHECK(k.first == 0);
			}
		}
}

TEST_CASE("central terms")
{
	auto r = build_rank_one(0);
	auto coc = CocycleFamily::zero(1, 3);
	coc.forms[2](0, 0) = 2;
	auto p = lambda_product(r, ModuleElement::basis(0), ModuleElement::basis(0), &coc, 0);
	CHECK(format_lambda_poly(p, r) == "(∂ + λ)·L + 2λ^2·c");

	// α_λ(a, ∂b) = (λ + β) α_λ(a, b)
	auto q = lambda_product(r, ModuleElement::basis(0), ModuleElement::basis(0, 1), &coc, 5);
	CHECK(format_lambda_poly(q, r) == "(∂^2 + 2λ∂ + λ^2)·L + (2λ^3 + 10λ^2)·c");

	CHECK_THROWS_AS(lambda_product(r, ModuleElement::central_unit(), ModuleElement::basis(0)),
	                CentralInputError);
	auto wrong = CocycleFamily::zero(2, 1);
	CHECK_THROWS_AS(lambda_product(r, ModuleElement::basis(0), ModuleElement::basis(0), &wrong),
	                DimensionMismatch);
}

TEST_CASE("sesquilinearity")
{
	std::mt19937 rng(2);
	auto coc = CocycleFamily::zero(2, 2);
	coc.forms[1](0, 1) = 3;
	coc.forms[2](1, 0) = Scalar(1, 2);
	for (int t = 0; t < 30; ++t)
	{
		auto alg = random_algebra(rng, 2, {Op::ld, Op::rd, Op::circ}, 0.4);
		ModuleElement x, y;
		for (int i = 0; i < 3; ++i)
		{
			x.add(rng() % 3, rng() % 2, small_rational(rng));
			y.add(rng() % 3, rng() % 2, small_rational(rng));
		}
		Scalar beta(static_cast<long>(rng() % 5) - 2);
		auto dx = x.derivative(beta);
		auto lhs = lambda_product(alg, dx, y, &coc, beta);
		auto base = lambda_product(alg, x, y, &coc, beta);
		// lhs + λ·base = 0
		LambdaPoly sum = lhs;
		for (auto const &[deg, m] : base.coeffs)
			sum.add(deg + 1, m);
		CHECK(sum.is_zero());
	}
}

TEST_CASE("conformal left-symmetry examples")
{
	CHECK(check_conformal_left_symmetry(build_rank_one(0)).passed);
	CHECK(check_conformal_left_symmetry(build_rank_one(Scalar(7, 3))).passed);
	CHECK(check_conformal_left_symmetry(rank_two(1, 1)).passed);
	CHECK(check_conformal_left_symmetry(lw_quadratic()).passed);

	// e1∘e2 = e1 alone is not left-symmetric (the associators of (e1,e2,e2)
	// and (e2,e1,e2) are e1 and 0); the opposite product e2∘e1 = e1 is.
	AlgebraSpec right("x", {"e1", "e2"});
	right.set_product(Op::circ, 0, 1, vec({1, 0}));
	CHECK_THROWS_AS(build_current(right), IdentityError);
	AlgebraSpec lsa("lsa", {"e1", "e2"});
	lsa.set_product(Op::circ, 1, 0, vec({1, 0}));
	REQUIRE(check_identity(lsa, Identity::left_symmetric).passed);
	CHECK(check_conformal_left_symmetry(build_current(lsa)).passed);
	CHECK(check_conformal_left_symmetry(build_current(zero_algebra(2))).passed);

	// L▷W = W alone satisfies every pre-GD identity, so its conformal algebra
	// is left-symmetric.
	AlgebraSpec lw_rd("lw-rd", {"L", "W"});
	lw_rd.set_product(Op::rd, 0, 1, vec({0, 1}));
	CHECK(is_pre_gd(lw_rd));
	CHECK(check_conformal_left_symmetry(lw_rd).passed);

	auto rep = check_conformal_left_symmetry(rd_only());
	CHECK_FALSE(rep.passed);
	REQUIRE_FALSE(rep.violations.empty());
	CHECK(rep.violations.front().basis == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("build_current rejects non-left-symmetric input")
{
	AlgebraSpec not_ls("x", {"a", "b"});
	not_ls.set_product(Op::circ, 0, 0, vec({0, 1}));
	not_ls.set_product(Op::circ, 1, 0, vec({1, 0}));
	REQUIRE_FALSE(check_identity(not_ls, Identity::left_symmetric).passed);
	CHECK_THROWS_AS(build_current(not_ls), IdentityError);
}

TEST_CASE("conformal left-symmetry ⇔ pre-GD suite on random tensors")
{
	std::mt19937 rng(17);
	int pass = 0, total = 0;
	for (int i = 0; i < 120; ++i)
	{
		auto alg = random_algebra(rng, 2 + i % 2, {Op::ld, Op::rd, Op::circ}, i % 4 == 0 ? 0.08 : 0.2);
		bool conformal = check_conformal_left_symmetry(alg).passed;
		bool suite = is_pre_gd(alg);
		CHECK(conformal == suite);
		pass += suite;
		++total;
	}
	MESSAGE(pass << " of " << total << " random tensors were pre-GD");
}

TEST_CASE("coefficient algebra products")
{
	auto r0 = build_rank_one(0);
	int const N = 3;
	auto x = WindowedElement::basis(N, 0, 1);
	auto p = coeff_product(r0, x, x);
	REQUIRE(p.terms.size() == 1);
	CHECK(p.terms.begin()->first == std::make_pair(std::size_t{0}, 1));
	CHECK(p.terms.begin()->second == -1);

	auto r1 = build_rank_one(1);
	auto q = coeff_product(r1, WindowedElement::basis(N, 0, 0), WindowedElement::basis(N, 0, 0));
	REQUIRE(q.terms.size() == 1);
	CHECK(q.terms.begin()->first == std::make_pair(std::size_t{0}, 0));
	CHECK(q.terms.begin()->second == 1);

	auto coc = CocycleFamily::zero(1, 3);
	coc.forms[2](0, 0) = 1;
	auto c = coeff_product(r0, WindowedElement::basis(N, 0, 2), WindowedElement::basis(N, 0, -1), &coc);
	CHECK(c.central == 2);

	auto esc = coeff_product(r1, WindowedElement::basis(N, 0, 3), WindowedElement::basis(N, 0, 2));
	CHECK(esc.escaped);

	CHECK_THROWS_AS(coeff_product(r0, WindowedElement::basis(2, 0, 0), WindowedElement::basis(3, 0, 0)),
	                WindowMismatch);
}

TEST_CASE("coefficient algebra left-symmetry")
{
	auto rep = check_coeff_left_symmetry(build_rank_one(1), 3);
	CHECK(rep.passed);
	CHECK(rep.checked > 0);
	CHECK(rep.skipped > 0);
	CHECK(check_coeff_left_symmetry(lw_quadratic(), 3).passed);
	CHECK(check_coeff_left_symmetry(zero_algebra(2), 2).passed);

	auto perturbed = rank_two(1, 1);
	perturbed.set_product(Op::rd, 1, 1, vec({1, 0}));
	REQUIRE_FALSE(check_identity(perturbed, Identity::pre_gd_compat).passed);
	CHECK_FALSE(check_coeff_left_symmetry(perturbed, 3).passed);

	auto coc = CocycleFamily::zero(1, 3);
	coc.forms[2](0, 0) = 1;
	CHECK(check_coeff_left_symmetry(build_rank_one(0), 3, &coc).passed);
}
