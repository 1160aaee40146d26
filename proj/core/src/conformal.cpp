#include "pregd/conformal.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <tuple>
#include <vector>

#include "pregd/error.hpp"

namespace pregd {

// ---------------------------------------------------------------- ModuleElement

ModuleElement ModuleElement::basis(std::size_t i, unsigned d_degree)
{
	ModuleElement m;
	m.add(d_degree, i, 1);
	return m;
}

ModuleElement ModuleElement::central_unit()
{
	ModuleElement m;
	m.central_ = 1;
	return m;
}

void ModuleElement::add(unsigned d_degree, std::size_t basis, Scalar const &c)
{
	if (c == 0)
		return;
	Key k{d_degree, basis};
	auto it = terms_.find(k);
	if (it == terms_.end())
		terms_.emplace(k, c);
	else if ((it->second += c) == 0)
		terms_.erase(it);
}

ModuleElement &ModuleElement::operator+=(ModuleElement const &o)
{
	for (auto const &[k, c] : o.terms_)
		add(k.first, k.second, c);
	central_ += o.central_;
	return *this;
}

ModuleElement ModuleElement::derivative(Scalar const &beta) const
{
	ModuleElement out;
	for (auto const &[k, c] : terms_)
		out.add(k.first + 1, k.second, c);
	out.central_ = beta * central_;
	return out;
}

ModuleElement operator*(Scalar const &s, ModuleElement const &x)
{
	ModuleElement out;
	if (s == 0)
		return out;
	for (auto const &[k, c] : x.terms_)
		out.add(k.first, k.second, s * c);
	out.central_ = s * x.central_;
	return out;
}

ModuleElement operator-(ModuleElement const &a, ModuleElement const &b)
{
	ModuleElement out = a;
	out += Scalar(-1) * b;
	return out;
}

void LambdaPoly::add(unsigned lambda_degree, ModuleElement const &m)
{
	auto &slot = coeffs[lambda_degree];
	slot += m;
	if (slot.is_zero())
		coeffs.erase(lambda_degree);
}

void LambdaMuPoly::add(unsigned lambda_degree, unsigned mu_degree, ModuleElement const &m)
{
	auto key = std::make_pair(lambda_degree, mu_degree);
	auto &slot = coeffs[key];
	slot += m;
	if (slot.is_zero())
		coeffs.erase(key);
}

LambdaMuPoly operator-(LambdaMuPoly const &a, LambdaMuPoly const &b)
{
	LambdaMuPoly out = a;
	for (auto const &[k, m] : b.coeffs)
		out.add(k.first, k.second, Scalar(-1) * m);
	return out;
}

// ---------------------------------------------------------------- products

namespace {

constexpr std::size_t central_index = std::numeric_limits<std::size_t>::max();

// Monomial λ^l μ^m ∂^d times a basis element, or times c when k is
// central_index (then d is always 0).
struct Mono
{
	unsigned l = 0, m = 0, d = 0;
	std::size_t k = 0;
	auto operator<=>(Mono const &) const = default;
};

using Poly = std::map<Mono, Scalar>;

void poly_add(Poly &p, Mono const &mono, Scalar const &c)
{
	if (c == 0)
		return;
	auto it = p.find(mono);
	if (it == p.end())
		p.emplace(mono, c);
	else if ((it->second += c) == 0)
		p.erase(it);
}

// Multiplies by (cd ∂ + cl λ + cm μ), with ∂ acting as β on the central part.
Poly mul_linear(Poly const &p, Scalar const &cd, Scalar const &cl, Scalar const &cm,
                Scalar const &beta)
{
	Poly out;
	for (auto const &[mono, c] : p)
	{
		if (mono.k == central_index)
			poly_add(out, mono, cd * beta * c);
		else
			poly_add(out, Mono{mono.l, mono.m, mono.d + 1, mono.k}, cd * c);
		poly_add(out, Mono{mono.l + 1, mono.m, mono.d, mono.k}, cl * c);
		poly_add(out, Mono{mono.l, mono.m + 1, mono.d, mono.k}, cm * c);
	}
	return out;
}

void add_vector(Poly &p, Mono mono, Vector const &v, Scalar const &scale = 1)
{
	for (std::size_t k = 0; k < v.size(); ++k)
		if (v[k] != 0)
		{
			mono.k = k;
			poly_add(p, mono, scale * v[k]);
		}
}

// The variable of the product is ν = cl λ + cm μ.
struct Variable
{
	Scalar cl, cm;
};

void check_cocycle_fits(AlgebraSpec const &alg, CocycleFamily const *cocycle)
{
	if (cocycle == nullptr)
		return;
	if (cocycle->forms.size() != cocycle->degree_cap + 1)
		throw DimensionMismatch("cocycle: form count differs from degree cap + 1");
	for (auto const &f : cocycle->forms)
		if (f.rows() != alg.dim() || f.cols() != alg.dim())
			throw DimensionMismatch("cocycle: form size differs from algebra dimension");
}

// (e_i)_ν (e_j) = ∂(e_j◁e_i) + e_i∘e_j + ν(e_i⋆e_j) + α_ν(e_i,e_j)c.
Poly basis_product(AlgebraSpec const &alg, std::size_t i, std::size_t j, CocycleFamily const *cocycle,
                   Variable const &nu)
{
	Poly p;
	add_vector(p, Mono{0, 0, 1, 0}, alg.basis_product(Op::ld, j, i));
	add_vector(p, Mono{0, 0, 0, 0}, alg.basis_product(Op::circ, i, j));
	auto star = alg.basis_product(Op::star, i, j);
	add_vector(p, Mono{1, 0, 0, 0}, star, nu.cl);
	add_vector(p, Mono{0, 1, 0, 0}, star, nu.cm);
	if (cocycle != nullptr)
	{
		// Horner evaluation of sum_k ν^k α_k keeps the binomial expansion exact.
		Poly central;
		for (std::size_t k = cocycle->degree_cap + 1; k-- > 0;)
		{
			central = mul_linear(central, 0, nu.cl, nu.cm, 0);
			poly_add(central, Mono{0, 0, 0, central_index}, cocycle->forms[k](i, j));
		}
		for (auto const &[mono, c] : central)
			poly_add(p, mono, c);
	}
	return p;
}

Poly element_product(AlgebraSpec const &alg, ModuleElement const &x, ModuleElement const &y,
                     CocycleFamily const *cocycle, Scalar const &beta, Variable const &nu)
{
	if (x.central() != 0 || y.central() != 0)
		throw CentralInputError("λ-product arguments must not have a central part");
	Poly out;
	for (auto const &[kx, cx] : x.terms())
		for (auto const &[ky, cy] : y.terms())
		{
			if (kx.second >= alg.dim() || ky.second >= alg.dim())
				throw DimensionMismatch("module element refers to a basis index out of range");
			Poly p = basis_product(alg, kx.second, ky.second, cocycle, nu);
			for (unsigned s = 0; s < ky.first; ++s)
				p = mul_linear(p, 1, nu.cl, nu.cm, beta);
			for (unsigned q = 0; q < kx.first; ++q)
				p = mul_linear(p, 0, -nu.cl, -nu.cm, beta);
			for (auto const &[mono, c] : p)
				poly_add(out, mono, cx * cy * c);
		}
	return out;
}

// Products of a polynomial-coefficient left factor with a fixed right factor,
// or the other way round. Central coefficients annihilate.
Poly nested_left(AlgebraSpec const &alg, Poly const &left, std::size_t right,
                 CocycleFamily const *cocycle, Scalar const &beta, Variable const &nu)
{
	Poly out;
	for (auto const &[mono, c] : left)
	{
		if (mono.k == central_index)
			continue;
		auto p = element_product(alg, ModuleElement::basis(mono.k, mono.d), ModuleElement::basis(right),
		                         cocycle, beta, nu);
		for (auto const &[m2, c2] : p)
			poly_add(out, Mono{m2.l + mono.l, m2.m + mono.m, m2.d, m2.k}, c * c2);
	}
	return out;
}

Poly nested_right(AlgebraSpec const &alg, std::size_t left, Poly const &right,
                  CocycleFamily const *cocycle, Scalar const &beta, Variable const &nu)
{
	Poly out;
	for (auto const &[mono, c] : right)
	{
		if (mono.k == central_index)
			continue;
		auto p = element_product(alg, ModuleElement::basis(left), ModuleElement::basis(mono.k, mono.d),
		                         cocycle, beta, nu);
		for (auto const &[m2, c2] : p)
			poly_add(out, Mono{m2.l + mono.l, m2.m + mono.m, m2.d, m2.k}, c * c2);
	}
	return out;
}

Variable const lambda{1, 0};
Variable const mu{0, 1};
Variable const lambda_plus_mu{1, 1};

} // namespace

LambdaPoly lambda_product(AlgebraSpec const &alg, ModuleElement const &x, ModuleElement const &y,
                          CocycleFamily const *cocycle, Scalar const &beta)
{
	check_cocycle_fits(alg, cocycle);
	LambdaPoly out;
	for (auto const &[mono, c] : element_product(alg, x, y, cocycle, beta, lambda))
	{
		ModuleElement m;
		if (mono.k == central_index)
			m.add_central(c);
		else
			m.add(mono.d, mono.k, c);
		out.add(mono.l, m);
	}
	return out;
}

LambdaMuPoly left_symmetry_residual(AlgebraSpec const &alg, std::size_t a, std::size_t b,
                                    std::size_t c, CocycleFamily const *cocycle, Scalar const &beta)
{
	check_cocycle_fits(alg, cocycle);
	auto ea = ModuleElement::basis(a);
	auto eb = ModuleElement::basis(b);
	auto ec = ModuleElement::basis(c);

	Poly ab = element_product(alg, ea, eb, cocycle, beta, lambda);
	Poly bc = element_product(alg, eb, ec, cocycle, beta, mu);
	Poly ba = element_product(alg, eb, ea, cocycle, beta, mu);
	Poly ac = element_product(alg, ea, ec, cocycle, beta, lambda);

	Poly total;
	auto accumulate = [&](Poly const &p, Scalar const &sign) {
		for (auto const &[mono, x] : p)
			poly_add(total, mono, sign * x);
	};
	accumulate(nested_left(alg, ab, c, cocycle, beta, lambda_plus_mu), 1);
	accumulate(nested_right(alg, a, bc, cocycle, beta, lambda), -1);
	accumulate(nested_left(alg, ba, c, cocycle, beta, lambda_plus_mu), -1);
	accumulate(nested_right(alg, b, ac, cocycle, beta, mu), 1);

	LambdaMuPoly out;
	for (auto const &[mono, x] : total)
	{
		ModuleElement m;
		if (mono.k == central_index)
			m.add_central(x);
		else
			m.add(mono.d, mono.k, x);
		out.add(mono.l, mono.m, m);
	}
	return out;
}

IdentityReport check_conformal_left_symmetry(AlgebraSpec const &alg, CocycleFamily const *cocycle,
                                             Scalar const &beta)
{
	IdentityReport rep;
	rep.identity_id = "CONFORMAL_LEFT_SYMMETRY";
	std::size_t const n = alg.dim();
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c)
			{
				++rep.checked;
				auto res = left_symmetry_residual(alg, a, b, c, cocycle, beta);
				for (auto const &[lm, m] : res.coeffs)
				{
					std::string const prefix =
					    "lambda^" + std::to_string(lm.first) + " mu^" + std::to_string(lm.second);
					std::map<unsigned, Vector> by_d;
					for (auto const &[k, x] : m.terms())
					{
						auto &v = by_d[k.first];
						if (v.empty())
							v = zero_vector(n);
						v[k.second] = x;
					}
					for (auto &[d, v] : by_d)
						rep.add(Violation{{a, b, c}, "left-symmetry", std::move(v),
						                  prefix + " d^" + std::to_string(d)});
					if (m.central() != 0)
						rep.add(Violation{{a, b, c}, "left-symmetry", Vector{m.central()},
						                  prefix + " central"});
				}
			}
	return rep;
}

// ---------------------------------------------------------------- builders

AlgebraSpec build_rank_one(Scalar const &c)
{
	AlgebraSpec alg("rank-one", {"L"});
	alg.set_product(Op::ld, 0, 0, {Scalar(1)});
	alg.set_product(Op::rd, 0, 0, {Scalar(0)});
	alg.set_product(Op::circ, 0, 0, {c});
	return alg;
}

AlgebraSpec build_current(AlgebraSpec const &alg)
{
	auto ls = check_identity(alg, Identity::left_symmetric);
	if (!ls.passed)
		throw IdentityError("current algebra needs a left-symmetric product; " +
		                    std::to_string(ls.violations.size()) + " violations");
	AlgebraSpec out(alg.name().empty() ? "current" : "current-" + alg.name(), alg.basis());
	out.set(Op::ld, StructureTensor(alg.dim()));
	out.set(Op::rd, StructureTensor(alg.dim()));
	out.set(Op::circ, alg.tensor(Op::circ) ? *alg.tensor(Op::circ) : StructureTensor(alg.dim()));
	return out;
}

// ---------------------------------------------------------------- formatting

namespace {

std::string coefficient_text(Scalar const &abs, bool has_vars)
{
	if (abs.get_den() == 1)
		return has_vars && abs == 1 ? "" : abs.get_str();
	return has_vars ? "(" + abs.get_str() + ")" : abs.get_str();
}

std::string power(char const *var, unsigned e)
{
	if (e == 0)
		return "";
	return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
}

struct Monomial
{
	unsigned l, d;
	Scalar c;
};

// Signed text of one monomial, "-" prefixed when negative.
std::string monomial_text(Monomial const &m)
{
	std::string vars = power("λ", m.l) + power("∂", m.d);
	Scalar abs = m.c < 0 ? Scalar(-m.c) : m.c;
	std::string body = coefficient_text(abs, !vars.empty()) + vars;
	return (m.c < 0 ? "-" : "") + body;
}

std::string group_text(std::vector<Monomial> mons, std::string const &label)
{
	std::sort(mons.begin(), mons.end(), [](Monomial const &x, Monomial const &y) {
		if (x.l + x.d != y.l + y.d)
			return x.l + x.d > y.l + y.d;
		return x.d > y.d;
	});
	if (mons.size() == 1)
	{
		auto const &m = mons.front();
		if (m.l == 0 && m.d == 0)
		{
			if (m.c == 1)
				return label;
			if (m.c == -1)
				return "-" + label;
			Scalar abs = m.c < 0 ? Scalar(-m.c) : m.c;
			std::string num = abs.get_den() == 1 ? abs.get_str() : "(" + abs.get_str() + ")";
			return (m.c < 0 ? "-" : "") + num + "·" + label;
		}
		return monomial_text(m) + "·" + label;
	}
	std::string s = "(";
	for (std::size_t i = 0; i < mons.size(); ++i)
	{
		std::string t = monomial_text(mons[i]);
		if (i == 0)
			s += t;
		else if (t.front() == '-')
			s += " - " + t.substr(1);
		else
			s += " + " + t;
	}
	return s + ")·" + label;
}

} // namespace

std::string format_lambda_poly(LambdaPoly const &p, AlgebraSpec const &alg)
{
	std::map<std::size_t, std::vector<Monomial>> groups;
	std::vector<Monomial> central;
	for (auto const &[l, m] : p.coeffs)
	{
		for (auto const &[k, c] : m.terms())
			groups[k.second].push_back(Monomial{l, k.first, c});
		if (m.central() != 0)
			central.push_back(Monomial{l, 0, m.central()});
	}
	std::vector<std::string> parts;
	for (auto &[k, mons] : groups)
		parts.push_back(group_text(mons, k < alg.dim() ? alg.basis()[k] : "e" + std::to_string(k)));
	if (!central.empty())
		parts.push_back(group_text(central, "c"));
	if (parts.empty())
		return "0";
	std::string s = parts.front();
	for (std::size_t i = 1; i < parts.size(); ++i)
		s += parts[i].front() == '-' ? " - " + parts[i].substr(1) : " + " + parts[i];
	return s;
}

// ---------------------------------------------------------------- coefficient algebra

WindowedElement WindowedElement::basis(int window, std::size_t i, int exponent)
{
	WindowedElement w;
	w.window = window;
	w.add(i, exponent, 1);
	return w;
}

void WindowedElement::add(std::size_t basis, int exponent, Scalar const &c)
{
	if (c == 0)
		return;
	if (exponent < -window || exponent > window)
	{
		escaped = true;
		return;
	}
	auto key = std::make_pair(basis, exponent);
	auto it = terms.find(key);
	if (it == terms.end())
		terms.emplace(key, c);
	else if ((it->second += c) == 0)
		terms.erase(it);
}

WindowedElement operator-(WindowedElement const &a, WindowedElement const &b)
{
	if (a.window != b.window)
		throw WindowMismatch("windowed elements have different windows");
	WindowedElement out = a;
	for (auto const &[k, c] : b.terms)
		out.add(k.first, k.second, -c);
	out.central -= b.central;
	out.escaped = a.escaped || b.escaped;
	return out;
}

WindowedElement coeff_product(AlgebraSpec const &alg, WindowedElement const &x,
                              WindowedElement const &y, CocycleFamily const *cocycle)
{
	if (x.window != y.window)
		throw WindowMismatch("coefficient product: windows " + std::to_string(x.window) + " and " +
		                     std::to_string(y.window) + " differ");
	check_cocycle_fits(alg, cocycle);
	WindowedElement out;
	out.window = x.window;
	out.escaped = x.escaped || y.escaped;
	std::size_t const n = alg.dim();
	for (auto const &[kx, cx] : x.terms)
		for (auto const &[ky, cy] : y.terms)
		{
			auto [a, m] = kx;
			auto [b, e] = ky;
			Scalar const w = cx * cy;
			auto rd = alg.basis_product(Op::rd, a, b);
			auto ld = alg.basis_product(Op::ld, b, a);
			auto circ = alg.basis_product(Op::circ, a, b);
			for (std::size_t k = 0; k < n; ++k)
			{
				out.add(k, m + e - 1, w * (Scalar(m) * rd[k] - Scalar(e) * ld[k]));
				out.add(k, m + e, w * circ[k]);
			}
			if (cocycle != nullptr)
			{
				// sum_j m(m-1)...(m-j+1) α_j(a,b) δ_{m+n-j+1,0}
				Scalar falling = 1;
				for (std::size_t j = 0; j <= cocycle->degree_cap; ++j)
				{
					if (m + e - static_cast<int>(j) + 1 == 0)
						out.central += w * falling * cocycle->forms[j](a, b);
					falling *= Scalar(m - static_cast<int>(j));
				}
			}
		}
	return out;
}

IdentityReport check_coeff_left_symmetry(AlgebraSpec const &alg, int window,
                                         CocycleFamily const *cocycle)
{
	IdentityReport rep;
	rep.identity_id = "COEFF_LEFT_SYMMETRY";
	std::size_t const n = alg.dim();
	auto prod = [&](WindowedElement const &x, WindowedElement const &y) {
		return coeff_product(alg, x, y, cocycle);
	};
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c)
				for (int m = -window; m <= window; ++m)
					for (int e = -window; e <= window; ++e)
						for (int p = -window; p <= window; ++p)
						{
							auto x = WindowedElement::basis(window, a, m);
							auto y = WindowedElement::basis(window, b, e);
							auto z = WindowedElement::basis(window, c, p);
							auto xy = prod(x, y);
							auto yx = prod(y, x);
							auto yz = prod(y, z);
							auto xz = prod(x, z);
							auto lhs = prod(xy, z) - prod(x, yz);
							auto rhs = prod(yx, z) - prod(y, xz);
							auto res = lhs - rhs;
							if (res.escaped)
							{
								++rep.skipped;
								continue;
							}
							++rep.checked;
							if (res.is_zero())
								continue;
							std::size_t const width = static_cast<std::size_t>(2 * window + 1);
							Vector v = zero_vector(n * width + 1);
							for (auto const &[k, coef] : res.terms)
								v[k.first * width + static_cast<std::size_t>(k.second + window)] = coef;
							v.back() = res.central;
							std::ostringstream detail;
							detail << "m=" << m << " n=" << e << " p=" << p;
							rep.add(Violation{{a, b, c}, "coeff-left-symmetry", std::move(v),
							                  detail.str()});
						}
	return rep;
}

} // namespace pregd
