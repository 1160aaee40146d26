#include <benchmark/benchmark.h>

#include <random>

#include "pregd/cohomology.hpp"
#include "pregd/conformal.hpp"
#include "pregd/constructions.hpp"
#include "pregd/ideals.hpp"
#include "pregd/identities.hpp"

using namespace pregd;

namespace {

// Pre-GD algebra of dimension n from the truncated binomial Zinbiel algebra.
AlgebraSpec zinbiel_pre_gd(std::size_t n)
{
	auto [z, d] = truncated_binomial_zinbiel(n);
	return zinbiel_to_pre_gd(z, d, Scalar(1, 2), 1);
}

Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed)
{
	std::mt19937 rng(seed);
	std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
	Matrix m(rows, cols);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t j = 0; j < cols; ++j)
			m(i, j) = Scalar(num(rng), den(rng));
	return m;
}

void BM_nullspace(benchmark::State &state)
{
	auto const n = static_cast<std::size_t>(state.range(0));
	auto m = random_matrix(n, n + 4, 1);
	for (auto _ : state)
		benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_nullspace)->Arg(8)->Arg(16)->Arg(32);

void BM_pre_gd_suite(benchmark::State &state)
{
	auto alg = zinbiel_pre_gd(static_cast<std::size_t>(state.range(0)));
	for (auto _ : state)
		benchmark::DoNotOptimize(is_pre_gd(alg));
}
BENCHMARK(BM_pre_gd_suite)->Arg(3)->Arg(5)->Arg(8);

void BM_conformal_left_symmetry(benchmark::State &state)
{
	auto alg = zinbiel_pre_gd(static_cast<std::size_t>(state.range(0)));
	for (auto _ : state)
		benchmark::DoNotOptimize(check_conformal_left_symmetry(alg));
}
BENCHMARK(BM_conformal_left_symmetry)->Arg(3)->Arg(5);

void BM_h2(benchmark::State &state)
{
	auto alg = zinbiel_pre_gd(static_cast<std::size_t>(state.range(0)));
	for (auto _ : state)
		benchmark::DoNotOptimize(h2(alg, 1, 3));
}
BENCHMARK(BM_h2)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_certify_simplicity(benchmark::State &state)
{
	AlgebraSpec alg("rank-two", {"L", "W"});
	alg.set_product(Op::ld, 0, 0, {1, 0});
	alg.set_product(Op::ld, 1, 0, {0, 1});
	alg.set_product(Op::circ, 0, 1, {1, 0});
	alg.set_product(Op::circ, 1, 0, {1, 0});
	alg.set_product(Op::circ, 1, 1, {1, 1});
	for (auto _ : state)
		benchmark::DoNotOptimize(certify_conformal_simplicity(alg));
}
BENCHMARK(BM_certify_simplicity);

void BM_coeff_left_symmetry(benchmark::State &state)
{
	auto alg = build_rank_one(1);
	for (auto _ : state)
		benchmark::DoNotOptimize(check_coeff_left_symmetry(alg, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_coeff_left_symmetry)->Arg(2)->Arg(4);

} // namespace

BENCHMARK_MAIN();
