#include "pregd/cohomology.hpp"

#include <map>
#include <utility>

#include "pregd/error.hpp"
#include "pregd/identities.hpp"

namespace pregd {

namespace {

// A linear combination of cocycle coordinates.
class Form
{
  public:
	Form(std::size_t dim, std::size_t cap) : dim_(dim), cap_(cap) {}

	// += coef · α_i(x, y)
	void add(Scalar const &coef, std::size_t i, Vector const &x, Vector const &y)
	{
		if (i > cap_ || coef == 0)
			return;
		for (std::size_t a = 0; a < dim_; ++a)
		{
			if (x[a] == 0)
				continue;
			for (std::size_t b = 0; b < dim_; ++b)
				if (y[b] != 0)
					coeffs_[cocycle_index(dim_, cap_, i, a, b)] += coef * x[a] * y[b];
		}
	}

	void append_to(Matrix &m) const
	{
		Vector row = zero_vector(m.cols());
		bool nonzero = false;
		for (auto const &[k, c] : coeffs_)
			if (c != 0)
			{
				row[k] = c;
				nonzero = true;
			}
		if (nonzero)
			m.append_row(row);
	}

  private:
	std::size_t dim_;
	std::size_t cap_;
	std::map<std::size_t, Scalar> coeffs_;
};

void require_pre_gd(AlgebraSpec const &alg)
{
	auto plain = alg;
	plain.set_truncation(std::nullopt);
	auto rep = check_identity(plain, Identity::pre_gd);
	if (!rep.passed)
		throw IdentityError("algebra fails " + rep.identity_id + " on its stored products (" +
		                    std::to_string(rep.violations.size()) + " violations)");
}

Scalar binomial(std::size_t n, std::size_t k)
{
	mpz_class c;
	mpz_bin_uiui(c.get_mpz_t(), n, k);
	return Scalar(c);
}

struct Products
{
	AlgebraSpec const &alg;
	Vector operator()(Op op, Vector const &x, Vector const &y) const { return eval(alg, op, x, y); }
};

bool is_zero_op(AlgebraSpec const &alg, Op op)
{
	auto const *t = alg.tensor(op);
	return !t || t->is_zero();
}

bool ld_commutative(AlgebraSpec const &alg)
{
	for (std::size_t a = 0; a < alg.dim(); ++a)
		for (std::size_t b = a + 1; b < alg.dim(); ++b)
			if (alg.basis_product(Op::ld, a, b) != alg.basis_product(Op::ld, b, a))
				return false;
	return true;
}

} // namespace

Matrix generate_cocycle_system(AlgebraSpec const &alg, Scalar const &beta, std::size_t degree_cap)
{
	require_pre_gd(alg);
	std::size_t const n = alg.dim(), cap = degree_cap;
	Matrix sys(0, (cap + 1) * n * n);
	Products p{alg};

	// In LHS - RHS of the extended identity for (a, b, c) the cocycle enters as
	//   α_{λ+μ}(λ(a∗b) - μ(b∗a) + [a,b], c)
	//   - α_λ(a, λ(c◁b) + μ(b⋆c) + β(c◁b) + b∘c)
	//   + α_μ(b, μ(c◁a) + λ(a⋆c) + β(c◁a) + a∘c).
	// Each piece is a polynomial in λ, μ whose monomials are collected below.
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c)
			{
				auto ea = unit_vector(n, a), eb = unit_vector(n, b), ec = unit_vector(n, c);
				auto ab_ast = p(Op::ast, ea, eb), ba_ast = p(Op::ast, eb, ea);
				auto bracket = p(Op::bracket, ea, eb);
				auto c_ld_b = p(Op::ld, ec, eb), c_ld_a = p(Op::ld, ec, ea);
				auto b_star_c = p(Op::star, eb, ec), a_star_c = p(Op::star, ea, ec);
				auto b_circ_c = p(Op::circ, eb, ec), a_circ_c = p(Op::circ, ea, ec);
				auto const_a = beta * c_ld_b + b_circ_c;
				auto const_b = beta * c_ld_a + a_circ_c;

				std::map<std::pair<std::size_t, std::size_t>, Form> monomials;
				auto at = [&](std::size_t i, std::size_t j) -> Form & {
					return monomials.try_emplace({i, j}, n, cap).first->second;
				};

				for (std::size_t i = 0; i <= cap; ++i)
				{
					// α_{λ+μ}: λ^k μ^{i-k} with weight C(i, k).
					for (std::size_t k = 0; k <= i; ++k)
					{
						Scalar const w = binomial(i, k);
						at(k + 1, i - k).add(w, i, ab_ast, ec);
						at(k, i - k + 1).add(-w, i, ba_ast, ec);
						at(k, i - k).add(w, i, bracket, ec);
					}
					at(i + 1, 0).add(-1, i, ea, c_ld_b);
					at(i, 1).add(-1, i, ea, b_star_c);
					at(i, 0).add(-1, i, ea, const_a);
					at(0, i + 1).add(1, i, eb, c_ld_a);
					at(1, i).add(1, i, eb, a_star_c);
					at(0, i).add(1, i, eb, const_b);
				}
				for (auto const &[mono, form] : monomials)
					form.append_to(sys);
			}
	return sys;
}

std::vector<CocycleVariant> applicable_variants(AlgebraSpec const &alg)
{
	std::vector<CocycleVariant> out{CocycleVariant::general};
	if (is_zero_op(alg, Op::circ))
		out.push_back(CocycleVariant::pre_novikov);
	if (is_zero_op(alg, Op::rd) && ld_commutative(alg))
		out.push_back(CocycleVariant::ls_poisson);
	return out;
}

Matrix hardcoded_cocycle_system(AlgebraSpec const &alg, Scalar const &beta, CocycleVariant variant)
{
	require_pre_gd(alg);
	if (variant == CocycleVariant::pre_novikov && !is_zero_op(alg, Op::circ))
		throw IdentityError("pre-Novikov cocycle equations need ∘ = 0");
	if (variant == CocycleVariant::ls_poisson && !(is_zero_op(alg, Op::rd) && ld_commutative(alg)))
		throw IdentityError("LS-Poisson cocycle equations need ▷ = 0 and a commutative ◁");

	std::size_t const n = alg.dim(), cap = 3;
	Matrix sys(0, (cap + 1) * n * n);
	Products p{alg};

	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c)
			{
				auto ea = unit_vector(n, a), eb = unit_vector(n, b), ec = unit_vector(n, c);
				auto ab_ast = p(Op::ast, ea, eb), ba_ast = p(Op::ast, eb, ea);
				auto c_ld_b = p(Op::ld, ec, eb), c_ld_a = p(Op::ld, ec, ea);
				auto a_rd_c = p(Op::rd, ea, ec);
				auto b_star_c = p(Op::star, eb, ec), a_star_c = p(Op::star, ea, ec);
				auto ab_circ = p(Op::circ, ea, eb), ba_circ = p(Op::circ, eb, ea);
				auto b_circ_c = p(Op::circ, eb, ec), a_circ_c = p(Op::circ, ea, ec);
				std::vector<Form> eqs;
				eqs.reserve(9); // eq() hands out references
				auto eq = [&]() -> Form & { return eqs.emplace_back(n, cap); };

				if (variant == CocycleVariant::ls_poisson)
				{
					// With · = ◁: α₂(a·b,c) = α₂(a,c·b) and four lower equations.
					auto const &ab = ab_ast;
					Form &l2 = eq();
					l2.add(1, 2, ab, ec);
					l2.add(-1, 2, ea, c_ld_b);
					Form &l3 = eq();
					l3.add(1, 2, ab_circ, ec);
					l3.add(-1, 1, ea, c_ld_b);
					l3.add(-beta, 2, ea, c_ld_b);
					l3.add(-1, 2, ea, b_circ_c);
					l3.add(1, 1, ab, ec);
					l3.add(-1, 2, ba_circ, ec);
					Form &l4 = eq();
					l4.add(2, 2, ab_circ, ec);
					l4.add(-1, 1, ea, c_ld_b);
					l4.add(-2, 2, ba_circ, ec);
					l4.add(1, 1, eb, c_ld_a);
					Form &l5 = eq();
					l5.add(1, 1, ab_circ, ec);
					l5.add(-1, 0, ea, c_ld_b);
					l5.add(-beta, 1, ea, c_ld_b);
					l5.add(-1, 1, ea, b_circ_c);
					l5.add(1, 0, ab, ec);
					l5.add(-1, 1, ba_circ, ec);
					l5.add(1, 0, eb, c_ld_a);
					Form &l6 = eq();
					l6.add(1, 0, ab_circ, ec);
					l6.add(-beta, 0, ea, c_ld_b);
					l6.add(-1, 0, ea, b_circ_c);
					l6.add(-1, 0, ba_circ, ec);
					l6.add(beta, 0, eb, c_ld_a);
					l6.add(1, 0, eb, a_circ_c);
				}
				else
				{
					// α₃(a∗b,c) = α₃(b∗a,c) = α₃(a,c◁b) = α₃(b,a▷c)
					Form &q1 = eq();
					q1.add(1, 3, ab_ast, ec);
					q1.add(-1, 3, ba_ast, ec);
					Form &q2 = eq();
					q2.add(1, 3, ba_ast, ec);
					q2.add(-1, 3, ea, c_ld_b);
					Form &q3 = eq();
					q3.add(1, 3, ea, c_ld_b);
					q3.add(-1, 3, eb, a_rd_c);

					// The ∘ terms vanish identically in the pre-Novikov variant.
					Form &e4 = eq();
					e4.add(1, 2, ab_ast, ec);
					e4.add(-1, 2, ea, c_ld_b);
					e4.add(-beta, 3, ea, c_ld_b);
					e4.add(-1, 3, ea, b_circ_c);
					e4.add(-1, 3, ba_circ, ec);
					e4.add(1, 3, ab_circ, ec);
					Form &e5 = eq();
					e5.add(2, 2, ab_ast, ec);
					e5.add(-1, 2, ba_ast, ec);
					e5.add(-1, 2, ea, b_star_c);
					e5.add(-3, 3, ba_circ, ec);
					e5.add(3, 3, ab_circ, ec);
					Form &e6 = eq();
					e6.add(1, 1, ab_ast, ec);
					e6.add(-1, 1, ea, c_ld_b);
					e6.add(-beta, 2, ea, c_ld_b);
					e6.add(-1, 2, ea, b_circ_c);
					e6.add(-1, 2, ba_circ, ec);
					e6.add(1, 2, ab_circ, ec);
					Form &e7 = eq();
					e7.add(1, 1, ab_ast, ec);
					e7.add(-1, 1, ba_ast, ec);
					e7.add(-1, 1, ea, b_star_c);
					e7.add(1, 1, eb, a_star_c);
					e7.add(-2, 2, ba_circ, ec);
					e7.add(2, 2, ab_circ, ec);
					Form &e8 = eq();
					e8.add(1, 0, ab_ast, ec);
					e8.add(-1, 0, ea, c_ld_b);
					e8.add(1, 0, eb, a_star_c);
					e8.add(-beta, 1, ea, c_ld_b);
					e8.add(-1, 1, ea, b_circ_c);
					e8.add(-1, 1, ba_circ, ec);
					e8.add(1, 1, ab_circ, ec);
					Form &e9 = eq();
					e9.add(1, 0, ab_circ, ec);
					e9.add(-beta, 0, ea, c_ld_b);
					e9.add(-1, 0, ea, b_circ_c);
					e9.add(-1, 0, ba_circ, ec);
					e9.add(beta, 0, eb, c_ld_a);
					e9.add(1, 0, eb, a_circ_c);
				}
				for (auto const &f : eqs)
					f.append_to(sys);
			}

	if (variant == CocycleVariant::ls_poisson)
		for (std::size_t a = 0; a < n; ++a)
			for (std::size_t b = 0; b < n; ++b)
			{
				Form f(n, cap);
				f.add(1, 3, unit_vector(n, a), unit_vector(n, b));
				f.append_to(sys);
			}
	return sys;
}

CocycleFamily coboundary(AlgebraSpec const &alg, Scalar const &beta, std::size_t degree_cap,
                         Vector const &phi)
{
	std::size_t const n = alg.dim();
	if (phi.size() != n)
		throw DimensionMismatch("coboundary: φ has the wrong length");
	if (degree_cap == 0)
		throw InvalidArgument("coboundaries need a degree cap of at least 1");
	auto f = [&](Vector const &v) {
		Scalar s = 0;
		for (std::size_t k = 0; k < n; ++k)
			s += phi[k] * v[k];
		return s;
	};
	auto out = CocycleFamily::zero(n, degree_cap);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
		{
			out.forms[0](a, b) = beta * f(alg.basis_product(Op::ld, b, a)) + f(alg.basis_product(Op::circ, a, b));
			out.forms[1](a, b) = f(alg.basis_product(Op::star, a, b));
		}
	return out;
}

Subspace coboundary_space(AlgebraSpec const &alg, Scalar const &beta, std::size_t degree_cap)
{
	std::size_t const n = alg.dim();
	std::vector<Vector> images;
	for (std::size_t k = 0; k < n; ++k)
		images.push_back(coboundary(alg, beta, degree_cap, unit_vector(n, k)).coordinates());
	return Subspace::span((degree_cap + 1) * n * n, images);
}

std::set<Op> check_spanning(AlgebraSpec const &alg)
{
	std::set<Op> out;
	std::size_t const n = alg.dim();
	if (n == 0)
		return out;
	for (Op op : {Op::ast, Op::star, Op::ld, Op::rd})
	{
		Matrix m(0, n);
		for (std::size_t a = 0; a < n; ++a)
			for (std::size_t b = 0; b < n; ++b)
				m.append_row(alg.basis_product(op, a, b));
		if (rank(m) == n)
			out.insert(op);
	}
	return out;
}

ExtensionResult h2(AlgebraSpec const &alg, Scalar const &beta, std::optional<std::size_t> degree_cap)
{
	ExtensionResult res;
	res.beta = beta;
	if (degree_cap)
	{
		res.degree_cap = *degree_cap;
		res.cap_limited = true;
	}
	else if (check_spanning(alg).empty())
		throw SpanningConditionError("none of V∗V, V⋆V, V◁V, V▷V spans V; give a degree cap");

	std::size_t const n = alg.dim(), cap = res.degree_cap;
	auto z2 = nullspace(generate_cocycle_system(alg, beta, cap));
	auto b2 = coboundary_space(alg, beta, cap);
	if (!z2.contains(b2))
		throw ContainmentError("a coboundary fails the cocycle equations");
	auto q = quotient(z2, b2);

	res.dim_Z2 = z2.dim();
	res.dim_B2 = b2.dim();
	res.dim_H2 = q.dim;
	for (auto const &v : z2.basis())
		res.cocycle_basis.push_back(CocycleFamily::from_coordinates(n, cap, v));
	for (auto const &v : q.representatives)
		res.representatives.push_back(CocycleFamily::from_coordinates(n, cap, v));
	return res;
}

std::optional<Vector> find_unit(AlgebraSpec const &alg)
{
	// Unknown e; conditions a∗e = a and a◁e = a, linear in e. Solved exactly
	// as the nullspace of [M | -rhs] with the last coordinate normalised.
	std::size_t const n = alg.dim();
	if (n == 0)
		return std::nullopt;
	Matrix m(0, n + 1);
	for (Op op : {Op::ast, Op::ld})
		for (std::size_t a = 0; a < n; ++a)
		{
			for (std::size_t k = 0; k < n; ++k)
			{
				Vector row = zero_vector(n + 1);
				for (std::size_t j = 0; j < n; ++j)
					row[j] = alg.basis_product(op, a, j)[k];
				row[n] = a == k ? -1 : 0;
				m.append_row(row);
			}
		}
	auto ns = nullspace(m);
	for (auto const &v : ns.basis())
		if (v[n] != 0)
		{
			Vector e(v.begin(), v.end() - 1);
			Scalar const s = v[n];
			for (auto &x : e)
				x /= s;
			return e;
		}
	return std::nullopt;
}

bool unital_vanishing_check(AlgebraSpec const &alg, Scalar const &beta)
{
	if (beta == 0)
		throw InvalidArgument("unital vanishing needs β ≠ 0");
	if (!is_zero_op(alg, Op::circ))
		throw IdentityError("unital vanishing applies to pre-Novikov algebras (∘ = 0)");
	auto plain = alg;
	plain.set_truncation(std::nullopt);
	auto rep = check_identity(plain, Identity::pre_novikov);
	if (!rep.passed)
		throw IdentityError("algebra fails " + rep.identity_id);
	if (!find_unit(alg))
		throw NoUnitFound("no e with a∗e = a and a◁e = a for all a");
	return h2(alg, beta).dim_H2 == 0;
}

} // namespace pregd
