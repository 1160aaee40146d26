#pragma once

// Families of generated instances shared by the unit tests and the
// acceptance run.

#include <random>
#include <vector>

#include "pregd/conformal.hpp"
#include "pregd/constructions.hpp"
#include "pregd/identities.hpp"
#include "support/fixtures.hpp"

namespace pregd::testing {

/// Pre-GD algebras produced by the constructions, some in random bases.
inline std::vector<AlgebraSpec> construction_outputs(std::size_t count, unsigned seed)
{
	std::mt19937 rng(seed);
	std::vector<AlgebraSpec> out;
	std::vector<Scalar> ks = {0, 1, -3, Scalar(1, 2)};
	for (std::size_t t = 0; out.size() < count; ++t)
	{
		switch (t % 5)
		{
		case 0:
		case 1: {
			auto [z, d] = truncated_binomial_zinbiel(2 + t % 3);
			auto p = random_invertible(rng, z.dim());
			auto zr = change_basis(z, p);
			LinearMapSpec dr{inverse(p) * d.matrix * p};
			out.push_back(zinbiel_to_pre_gd(zr, dr, small_rational(rng), ks[t % ks.size()]));
			break;
		}
		case 2:
			out.push_back(pre_novikov_to_pre_gd(change_basis(simple_pre_novikov_2(), random_invertible(rng, 2)),
			                                    small_rational(rng)));
			break;
		case 3: {
			Scalar h = small_rational(rng);
			out.push_back(change_basis(rank_two(h, h), random_invertible(rng, 2)));
			break;
		}
		default:
			out.push_back(build_rank_one(small_rational(rng)));
		}
	}
	return out;
}

/// Random pre-Novikov algebras of dimension 1 and 2, plus rebased copies of
/// known simple ones.
inline std::vector<AlgebraSpec> pre_novikov_pool(unsigned seed, std::size_t attempts)
{
	std::mt19937 rng(seed);
	std::vector<AlgebraSpec> out;
	for (std::size_t t = 0; t < attempts; ++t)
	{
		auto alg = random_algebra(rng, 1 + t % 2, {Op::ld, Op::rd}, t % 2 ? 0.3 : 0.7);
		if (check_identity(alg, Identity::pre_novikov).passed)
			out.push_back(alg);
	}
	for (int t = 0; t < 10; ++t)
		out.push_back(change_basis(simple_pre_novikov_2(), random_invertible(rng, 2)));
	AlgebraSpec one("one", {"L"});
	one.set_product(Op::ld, 0, 0, vec({1}));
	out.push_back(one);
	return out;
}

} // namespace pregd::testing
