#include "pregd/constructions.hpp"

#include <string>

#include "pregd/error.hpp"
#include "pregd/identities.hpp"

namespace pregd {

namespace {

void require(AlgebraSpec const &alg, Identity id, std::string const &what,
             std::optional<LinearMapSpec> const &aux = std::nullopt, OpSlots const &slots = {})
{
	auto rep = check_identity(alg, id, aux, slots);
	if (!rep.passed)
		throw IdentityError(what + " fails " + rep.identity_id + " (" +
		                    std::to_string(rep.violations.size()) + " violations)");
}

void require_map(AlgebraSpec const &alg, LinearMapSpec const &D)
{
	if (D.matrix.rows() != alg.dim() || D.matrix.cols() != alg.dim())
		throw DimensionMismatch("linear map shape differs from algebra dimension");
}

// Fills `op` of `out` with f(e_i, e_j).
template <class F>
void fill(AlgebraSpec &out, Op op, F const &f)
{
	std::size_t const n = out.dim();
	out.set(op, StructureTensor(n));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			out.set_product(op, i, j, f(unit_vector(n, i), unit_vector(n, j)));
}

AlgebraSpec derived_shell(AlgebraSpec const &in, std::string const &suffix)
{
	AlgebraSpec out(in.name() + suffix, in.basis());
	out.set_truncation(in.truncation());
	return out;
}

void fill_pre_novikov(AlgebraSpec &out, AlgebraSpec const &zin, LinearMapSpec const &D, Scalar const &xi)
{
	auto dot = [&](Vector const &x, Vector const &y) { return eval(zin, Op::dot, x, y); };
	fill(out, Op::ld, [&](Vector const &a, Vector const &b) { return dot(D(b), a) + xi * dot(b, a); });
	fill(out, Op::rd, [&](Vector const &a, Vector const &b) { return dot(a, D(b)) + xi * dot(a, b); });
}

void require_zinbiel_input(AlgebraSpec const &zin, LinearMapSpec const &D)
{
	require_map(zin, D);
	require(zin, Identity::zinbiel, "input");
	require(zin, Identity::derivation, "derivation", D);
}

} // namespace

AlgebraSpec zinbiel_to_pre_novikov(AlgebraSpec const &zin, LinearMapSpec const &D, Scalar const &xi)
{
	require_zinbiel_input(zin, D);
	auto out = derived_shell(zin, "-pre-novikov");
	fill_pre_novikov(out, zin, D, xi);
	require(out, Identity::pre_novikov, "output");
	return out;
}

AlgebraSpec pre_novikov_to_pre_gd(AlgebraSpec const &pn, Scalar const &k)
{
	require(pn, Identity::pre_novikov, "input");
	auto out = pn;
	out.set_name(pn.name() + "-pre-gd");
	fill(out, Op::circ, [&](Vector const &a, Vector const &b) {
		return k * (eval(pn, Op::rd, a, b) - eval(pn, Op::ld, b, a));
	});
	require(out, Identity::pre_gd, "output");
	return out;
}

AlgebraSpec zinbiel_to_pre_gd(AlgebraSpec const &zin, LinearMapSpec const &D, Scalar const &xi,
                              Scalar const &k)
{
	require_zinbiel_input(zin, D);
	auto out = derived_shell(zin, "-pre-novikov-pre-gd");
	fill_pre_novikov(out, zin, D, xi);
	auto dot = [&](Vector const &x, Vector const &y) { return eval(zin, Op::dot, x, y); };
	// The ξ contributions of a▷b and b◁a cancel, so ∘ does not depend on ξ.
	fill(out, Op::circ, [&](Vector const &a, Vector const &b) { return k * (dot(a, D(b)) - dot(D(a), b)); });
	require(out, Identity::pre_gd, "output");
	return out;
}

AlgebraSpec ls_poisson_to_pre_gd(AlgebraSpec const &lsp)
{
	require(lsp, Identity::ls_poisson, "input");
	auto out = derived_shell(lsp, "-pre-gd");
	std::size_t const n = lsp.dim();
	out.set(Op::ld, lsp.tensor(Op::dot) ? *lsp.tensor(Op::dot) : StructureTensor(n));
	out.set(Op::rd, StructureTensor(n));
	out.set(Op::circ, lsp.tensor(Op::circ) ? *lsp.tensor(Op::circ) : StructureTensor(n));
	require(out, Identity::pre_gd, "output");
	return out;
}

AlgebraSpec comm_assoc_derivation_to_novikov_poisson(AlgebraSpec const &alg, LinearMapSpec const &D)
{
	require_map(alg, D);
	require(alg, Identity::comm_assoc, "input");
	require(alg, Identity::derivation, "derivation", D);
	auto out = derived_shell(alg, "-novikov-poisson");
	out.set(Op::dot, alg.tensor(Op::dot) ? *alg.tensor(Op::dot) : StructureTensor(alg.dim()));
	fill(out, Op::circ, [&](Vector const &x, Vector const &y) { return eval(alg, Op::dot, x, D(y)); });
	require(out, Identity::novikov_poisson, "output");
	return out;
}

std::pair<AlgebraSpec, LinearMapSpec> truncated_binomial_zinbiel(std::size_t n)
{
	if (n == 0)
		throw DimensionMismatch("binomial Zinbiel algebra needs N >= 1");
	std::vector<std::string> basis;
	for (std::size_t i = 1; i <= n; ++i)
		basis.push_back("x" + std::to_string(i));
	AlgebraSpec alg("binomial-zinbiel-" + std::to_string(n), basis);
	auto &t = alg.tensor_mut(Op::dot);
	Matrix d(n, n);
	for (std::size_t i = 1; i <= n; ++i)
	{
		d(i - 1, i - 1) = static_cast<long>(i);
		for (std::size_t j = 1; i + j <= n; ++j)
		{
			mpz_class c;
			mpz_bin_uiui(c.get_mpz_t(), i + j - 1, i);
			t(i - 1, j - 1, i + j - 1) = Scalar(c);
		}
	}
	return {alg, LinearMapSpec{d}};
}

std::pair<AlgebraSpec, LinearMapSpec> laurent_slice(std::size_t radius)
{
	int const r = static_cast<int>(radius);
	std::vector<std::string> basis;
	Truncation tr;
	tr.min_degree = -r;
	tr.max_degree = r;
	for (int i = -r; i <= r; ++i)
	{
		basis.push_back("t^" + std::to_string(i));
		tr.degree.push_back(i);
	}
	std::size_t const n = basis.size();
	AlgebraSpec alg("laurent-slice-" + std::to_string(radius), basis);
	auto &t = alg.tensor_mut(Op::dot);
	Matrix d(n, n);
	for (int i = -r; i <= r; ++i)
	{
		d(static_cast<std::size_t>(i + r), static_cast<std::size_t>(i + r)) = i;
		for (int j = -r; j <= r; ++j)
			if (i + j >= -r && i + j <= r)
				t(static_cast<std::size_t>(i + r), static_cast<std::size_t>(j + r),
				  static_cast<std::size_t>(i + j + r)) = 1;
	}
	alg.set_truncation(tr);
	return {alg, LinearMapSpec{d}};
}

} // namespace pregd
