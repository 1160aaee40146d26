#include "pregd/ideals.hpp"

#include <random>

#include "pregd/error.hpp"
#include "pregd/identities.hpp"

namespace pregd {

namespace {

std::vector<Matrix> multiplications(AlgebraSpec const &alg, std::set<Op> const &ops)
{
	std::vector<Matrix> out;
	for (Op op : ops)
		for (std::size_t i = 0; i < alg.dim(); ++i)
			for (Matrix m : {alg.left_mult(op, i), alg.right_mult(op, i)})
				if (!m.is_zero())
					out.push_back(std::move(m));
	return out;
}

Subspace close_under(std::vector<Matrix> const &gens, Subspace s)
{
	for (;;)
	{
		std::vector<Vector> images = s.basis();
		for (auto const &g : gens)
			for (auto const &x : s.basis())
				images.push_back(g.apply(x));
		auto next = Subspace::span(s.ambient_dim(), images);
		if (next == s)
			return s;
		s = std::move(next);
	}
}

bool proper(Subspace const &s) { return s.dim() > 0 && s.dim() < s.ambient_dim(); }

Vector flatten(Matrix const &m)
{
	Vector v;
	v.reserve(m.rows() * m.cols());
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			v.push_back(m(i, j));
	return v;
}

// Basis of the unital associative algebra generated by gens.
std::vector<Matrix> envelope(std::size_t n, std::vector<Matrix> const &gens)
{
	std::vector<Matrix> basis{Matrix::identity(n)};
	auto span = Subspace::span(n * n, {flatten(basis[0])});
	for (std::size_t next = 0; next < basis.size() && span.dim() < n * n; ++next)
		for (auto const &g : gens)
		{
			Matrix w = g * basis[next];
			auto v = flatten(w);
			if (span.contains(v))
				continue;
			span = span + Subspace::span(n * n, {v});
			basis.push_back(std::move(w));
			if (span.dim() == n * n)
				break;
		}
	return basis;
}

Scalar small_random(std::mt19937_64 &rng)
{
	std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
	Scalar x(num(rng), den(rng));
	x.canonicalize();
	return x;
}

bool products_vanish(AlgebraSpec const &alg, std::set<Op> const &ops)
{
	for (Op op : ops)
		if (auto const *t = alg.tensor(op); t && !t->is_zero())
			return false;
	return true;
}

bool is_zero_op(AlgebraSpec const &alg, Op op)
{
	auto const *t = alg.tensor(op);
	return !t || t->is_zero();
}

// Simple for ops, certified by the envelope.
bool certified_simple(AlgebraSpec const &alg, std::set<Op> const &ops)
{
	std::size_t const n = alg.dim();
	if (n == 0 || products_vanish(alg, ops))
		return false;
	return envelope(n, multiplications(alg, ops)).size() == n * n;
}

std::set<Op> const pre_gd_ops = {Op::ld, Op::rd, Op::circ};
std::set<Op> const pre_novikov_ops = {Op::ld, Op::rd};
std::set<Op> const novikov_poisson_ops = {Op::ld, Op::circ};

void require_pre_gd(AlgebraSpec const &alg)
{
	auto rep = check_identity(alg, Identity::pre_gd);
	if (!rep.passed)
		throw IdentityError("algebra fails " + rep.identity_id + " (" + std::to_string(rep.violations.size()) +
		                    " violations)");
	if (products_vanish(alg, pre_gd_ops))
		throw TrivialAlgebra("every product vanishes");
}

// Full column rank of [L_a; R_a] for ◁.
bool faithful(AlgebraSpec const &alg, Vector const &a)
{
	std::size_t const n = alg.dim();
	Matrix stacked(0, n);
	Matrix left(n, n), right(n, n);
	for (std::size_t j = 0; j < n; ++j)
	{
		auto e = unit_vector(n, j);
		auto l = eval(alg, Op::ld, a, e), r = eval(alg, Op::ld, e, a);
		for (std::size_t i = 0; i < n; ++i)
		{
			left(i, j) = l[i];
			right(i, j) = r[i];
		}
	}
	stacked.append_rows(left);
	stacked.append_rows(right);
	return rank(stacked) == n;
}

bool spans(AlgebraSpec const &alg, Op op)
{
	std::size_t const n = alg.dim();
	Matrix m(0, n);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			m.append_row(alg.basis_product(op, a, b));
	return rank(m) == n;
}

AlgebraSpec as_novikov_poisson(AlgebraSpec const &alg)
{
	AlgebraSpec np(alg.name(), alg.basis());
	np.set(Op::dot, alg.tensor(Op::ld) ? *alg.tensor(Op::ld) : StructureTensor(alg.dim()));
	np.set(Op::circ, alg.tensor(Op::circ) ? *alg.tensor(Op::circ) : StructureTensor(alg.dim()));
	return np;
}

} // namespace

IdealReport ideal_closure(AlgebraSpec const &alg, Subspace const &seed, std::set<Op> const &ops)
{
	if (seed.ambient_dim() != alg.dim())
		throw DimensionMismatch("ideal seed lives in the wrong space");
	auto closure = close_under(multiplications(alg, ops), seed);
	return IdealReport{seed, closure, proper(closure)};
}

bool is_ideal(AlgebraSpec const &alg, Subspace const &sub, std::set<Op> const &ops)
{
	if (sub.ambient_dim() != alg.dim())
		return false;
	for (auto const &g : multiplications(alg, ops))
		for (auto const &x : sub.basis())
			if (!sub.contains(g.apply(x)))
				return false;
	return true;
}

IdealSearch search_proper_ideal(AlgebraSpec const &alg, std::set<Op> const &ops, std::size_t trials,
                                std::uint64_t seed)
{
	IdealSearch out;
	std::size_t const n = alg.dim();
	if (n == 0)
		return out;
	auto gens = multiplications(alg, ops);
	std::mt19937_64 rng(seed);

	auto accept = [&](Subspace const &s, std::string const &how) {
		auto c = close_under(gens, s);
		if (!proper(c) || !is_ideal(alg, c, ops))
			return false;
		out.ideal = c;
		out.log.push_back("ideal of dimension " + std::to_string(c.dim()) + " from " + how);
		return true;
	};

	for (std::size_t i = 0; i < n; ++i)
		if (accept(Subspace::span(n, {unit_vector(n, i)}), "basis vector " + alg.basis()[i]))
			return out;
	for (std::size_t t = 0; t < trials; ++t)
	{
		Vector v(n);
		for (auto &x : v)
			x = small_random(rng);
		if (!is_zero(v) && accept(Subspace::span(n, {v}), "random vector " + std::to_string(t)))
			return out;
	}

	auto env = envelope(n, gens);
	out.envelope_dim = env.size();
	out.log.push_back("envelope dimension " + std::to_string(env.size()) + " of " + std::to_string(n * n));
	if (env.size() == n * n)
	{
		out.irreducible = true;
		return out;
	}

	// Probe elements: the envelope basis and random combinations of it.
	std::vector<Matrix> probes = env;
	for (std::size_t t = 0; t < trials; ++t)
	{
		Matrix m(n, n);
		for (auto const &b : env)
			m = m + small_random(rng) * b;
		probes.push_back(std::move(m));
	}
	for (std::size_t p = 0; p < probes.size(); ++p)
	{
		auto const &a = probes[p];
		auto const ker = nullspace(a);
		for (auto const &v : ker.basis())
			if (accept(Subspace::span(n, {v}), "kernel of probe " + std::to_string(p)))
				return out;
		// A kernel vector w of the transpose gives the invariant subspace
		// annihilated by every E^T w with E in the envelope.
		auto const coker = nullspace(a.transpose());
		for (auto const &w : coker.basis())
		{
			std::vector<Vector> rows;
			for (auto const &e : env)
				rows.push_back(e.transpose().apply(w));
			auto u = Subspace::span(n, rows);
			if (u.dim() == n)
				continue;
			auto ann = nullspace(Matrix::from_rows(n, u.basis()));
			if (accept(ann, "dual kernel of probe " + std::to_string(p)))
				return out;
		}
	}
	out.log.push_back("no proper ideal found");
	return out;
}

std::optional<Subspace> find_proper_ideal(AlgebraSpec const &alg, std::set<Op> const &ops, std::size_t trials,
                                          std::uint64_t seed)
{
	return search_proper_ideal(alg, ops, trials, seed).ideal;
}

std::string_view verdict_name(Verdict v)
{
	switch (v)
	{
	case Verdict::simple:
		return "simple";
	case Verdict::not_simple:
		return "not_simple";
	case Verdict::inconclusive:
		return "inconclusive";
	}
	return "";
}

std::string_view criterion_name(Criterion c)
{
	switch (c)
	{
	case Criterion::none:
		return "none";
	case Criterion::exhaustive:
		return "exhaustive";
	case Criterion::counterexample:
		return "counterexample";
	case Criterion::pre_novikov_spanning:
		return "pre_novikov_spanning";
	case Criterion::faithful_element:
		return "faithful_element";
	case Criterion::novikov_poisson:
		return "novikov_poisson";
	}
	return "";
}

SimplicityCertificate is_simple_pre_gd(AlgebraSpec const &alg, std::size_t trials, std::uint64_t seed)
{
	require_pre_gd(alg);
	SimplicityCertificate cert;
	cert.trials = trials;
	cert.seed = seed;
	auto s = search_proper_ideal(alg, pre_gd_ops, trials, seed);
	cert.log = s.log;
	if (s.ideal)
	{
		cert.verdict = Verdict::not_simple;
		cert.criterion = Criterion::counterexample;
		cert.ideal = s.ideal;
	}
	else if (s.irreducible)
	{
		cert.verdict = Verdict::simple;
		cert.criterion = Criterion::exhaustive;
	}
	return cert;
}

SimplicityCertificate certify_conformal_simplicity(AlgebraSpec const &alg, std::size_t trials, std::uint64_t seed)
{
	auto base = is_simple_pre_gd(alg, trials, seed);
	SimplicityCertificate cert;
	cert.trials = trials;
	cert.seed = seed;
	cert.log = base.log;
	if (base.verdict == Verdict::not_simple)
	{
		cert.verdict = Verdict::not_simple;
		cert.criterion = Criterion::counterexample;
		cert.ideal = base.ideal;
		cert.log.push_back("C[∂]I is a proper ideal of the conformal algebra");
		return cert;
	}

	if (certified_simple(alg, pre_novikov_ops) && spans(alg, Op::star))
	{
		cert.verdict = Verdict::simple;
		cert.criterion = Criterion::pre_novikov_spanning;
		cert.log.push_back("(V,◁,▷) simple and V⋆V = V");
		return cert;
	}

	bool const right_trivial = is_zero_op(alg, Op::rd);
	if (right_trivial && base.verdict == Verdict::simple)
	{
		std::size_t const n = alg.dim();
		std::vector<Vector> candidates;
		for (std::size_t i = 0; i < n; ++i)
			candidates.push_back(unit_vector(n, i));
		std::mt19937_64 rng(seed);
		for (std::size_t t = 0; t < trials; ++t)
		{
			Vector v(n);
			for (auto &x : v)
				x = small_random(rng);
			candidates.push_back(std::move(v));
		}
		for (auto const &a : candidates)
			if (faithful(alg, a))
			{
				cert.verdict = Verdict::simple;
				cert.criterion = Criterion::faithful_element;
				cert.element = a;
				cert.log.push_back("▷ = 0 and [L_a; R_a] has full column rank");
				return cert;
			}
	}

	if (right_trivial)
	{
		auto np = as_novikov_poisson(alg);
		if (check_identity(np, Identity::novikov_poisson).passed && certified_simple(alg, novikov_poisson_ops))
		{
			cert.verdict = Verdict::simple;
			cert.criterion = Criterion::novikov_poisson;
			cert.log.push_back("(V, ◁, ∘) is a simple Novikov-Poisson algebra");
			return cert;
		}
	}

	cert.log.push_back("no criterion applies");
	return cert;
}

bool verify_certificate(AlgebraSpec const &alg, SimplicityCertificate const &cert)
{
	switch (cert.verdict)
	{
	case Verdict::inconclusive:
		return true;
	case Verdict::not_simple:
		return cert.criterion == Criterion::counterexample && cert.ideal && proper(*cert.ideal) &&
		       is_ideal(alg, *cert.ideal, pre_gd_ops);
	case Verdict::simple:
		break;
	}
	switch (cert.criterion)
	{
	case Criterion::exhaustive:
		return certified_simple(alg, pre_gd_ops);
	case Criterion::pre_novikov_spanning:
		return check_identity(alg, Identity::pre_gd).passed && certified_simple(alg, pre_novikov_ops) &&
		       spans(alg, Op::star);
	case Criterion::faithful_element:
		return check_identity(alg, Identity::pre_gd).passed && is_zero_op(alg, Op::rd) &&
		       certified_simple(alg, pre_gd_ops) && cert.element && faithful(alg, *cert.element);
	case Criterion::novikov_poisson:
		return is_zero_op(alg, Op::rd) && check_identity(as_novikov_poisson(alg), Identity::novikov_poisson).passed &&
		       certified_simple(alg, novikov_poisson_ops);
	default:
		return false;
	}
}

bool some_pair_breaks_flip(AlgebraSpec const &alg)
{
	for (std::size_t a = 0; a < alg.dim(); ++a)
		for (std::size_t b = 0; b < alg.dim(); ++b)
			if (alg.basis_product(Op::rd, a, b) != -alg.basis_product(Op::ld, b, a))
				return true;
	return false;
}

std::optional<bool> check_flip_lemma(AlgebraSpec const &alg, std::size_t trials, std::uint64_t seed)
{
	if (!check_identity(alg, Identity::pre_novikov).passed)
		return std::nullopt;
	if (products_vanish(alg, pre_novikov_ops))
		return std::nullopt;
	auto s = search_proper_ideal(alg, pre_novikov_ops, trials, seed);
	if (!s.irreducible)
		return std::nullopt;
	return some_pair_breaks_flip(alg);
}

} // namespace pregd
