#pragma once

// Quadratic left-symmetric conformal algebras R = Q[∂]V built from pre-GD
// data, optionally centrally extended by a torsion element c with ∂c = βc.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pregd/algebra.hpp"
#include "pregd/cocycle.hpp"
#include "pregd/identities.hpp"

namespace pregd {

/// Element of Q[∂]V ⊕ Qc: terms keyed by (∂-degree, basis index) plus the
/// coefficient of c. Zero coefficients are never stored.
class ModuleElement
{
  public:
	using Key = std::pair<unsigned, std::size_t>;

	ModuleElement() = default;
	static ModuleElement basis(std::size_t i, unsigned d_degree = 0);
	static ModuleElement central_unit();

	std::map<Key, Scalar> const &terms() const { return terms_; }
	Scalar const &central() const { return central_; }

	void add(unsigned d_degree, std::size_t basis, Scalar const &c);
	void add_central(Scalar const &c) { central_ += c; }
	ModuleElement &operator+=(ModuleElement const &o);
	bool is_zero() const { return terms_.empty() && central_ == 0; }

	/// ∂ applied to the element, with ∂c = βc.
	ModuleElement derivative(Scalar const &beta) const;

	friend ModuleElement operator*(Scalar const &s, ModuleElement const &x);
	friend ModuleElement operator-(ModuleElement const &a, ModuleElement const &b);
	friend bool operator==(ModuleElement const &, ModuleElement const &) = default;

  private:
	std::map<Key, Scalar> terms_;
	Scalar central_ = 0;
};

/// Polynomial in λ with ModuleElement coefficients. The central parts of the
/// coefficients together form a λ-polynomial times c.
struct LambdaPoly
{
	std::map<unsigned, ModuleElement> coeffs;

	void add(unsigned lambda_degree, ModuleElement const &m);
	bool is_zero() const { return coeffs.empty(); }
	friend bool operator==(LambdaPoly const &, LambdaPoly const &) = default;
};

/// Polynomial in (λ, μ) with ModuleElement coefficients.
struct LambdaMuPoly
{
	std::map<std::pair<unsigned, unsigned>, ModuleElement> coeffs;

	void add(unsigned lambda_degree, unsigned mu_degree, ModuleElement const &m);
	bool is_zero() const { return coeffs.empty(); }
	friend LambdaMuPoly operator-(LambdaMuPoly const &a, LambdaMuPoly const &b);
	friend bool operator==(LambdaMuPoly const &, LambdaMuPoly const &) = default;
};

/// x_λ y = ∂(b◁a) + a∘b + λ(a⋆b) + α_λ(a,b)c on basis elements, extended by
/// (∂x)_λ y = -λ x_λ y and x_λ(∂y) = (∂+λ) x_λ y (with ∂ acting as β on c).
/// Throws CentralInputError if x or y has a central part, DimensionMismatch
/// when the cocycle does not fit the algebra.
LambdaPoly lambda_product(AlgebraSpec const &alg, ModuleElement const &x, ModuleElement const &y,
                          CocycleFamily const *cocycle = nullptr, Scalar const &beta = 0);

/// (a_λ b)_{λ+μ} c - a_λ(b_μ c) - (b_μ a)_{λ+μ} c + b_μ(a_λ c) for basis
/// elements a, b, c, expanded in λ and μ.
LambdaMuPoly left_symmetry_residual(AlgebraSpec const &alg, std::size_t a, std::size_t b,
                                    std::size_t c, CocycleFamily const *cocycle = nullptr,
                                    Scalar const &beta = 0);

/// Formal check of (a_λ b)_{λ+μ} c - a_λ(b_μ c) = (b_μ a)_{λ+μ} c - b_μ(a_λ c) on
/// all basis triples. Each violation carries one (λ, μ, ∂) monomial in
/// `detail` and the coefficient vector over the basis; central residuals use
/// detail "lambda^i mu^j central" and a one-entry residual.
IdentityReport check_conformal_left_symmetry(AlgebraSpec const &alg,
                                             CocycleFamily const *cocycle = nullptr,
                                             Scalar const &beta = 0);

/// One-dimensional pre-GD algebra with L◁L = L, ▷ = 0, L∘L = cL.
AlgebraSpec build_rank_one(Scalar const &c);

/// Pre-GD algebra with ◁ = ▷ = 0 and the given ∘. Throws IdentityError when
/// ∘ is not left-symmetric.
AlgebraSpec build_current(AlgebraSpec const &alg);

/// Stable text form such as "(∂ + λ + 1)·L + 2λ^2·c". Terms are grouped by basis
/// element in basis order with the central group last; inside a group,
/// monomials run by total degree descending, then ∂-degree descending.
std::string format_lambda_poly(LambdaPoly const &p, AlgebraSpec const &alg);

// ---------------------------------------------------------------- coefficient algebra

/// Element of V ⊗ Q[t, t^-1] restricted to exponents in [-window, window],
/// plus the coefficient of c ⊗ t^-1.
struct WindowedElement
{
	int window = 0;
	std::map<std::pair<std::size_t, int>, Scalar> terms; // (basis, exponent)
	Scalar central = 0;
	/// Set by coeff_product when a nonzero term fell outside the window. Such
	/// terms are dropped, so the element is then only partially known.
	bool escaped = false;

	static WindowedElement basis(int window, std::size_t i, int exponent);
	void add(std::size_t basis, int exponent, Scalar const &c);
	friend WindowedElement operator-(WindowedElement const &a, WindowedElement const &b);
	bool is_zero() const { return terms.empty() && central == 0; }
};

/// (a⊗t^m)∘(b⊗t^n) = m(a▷b)t^{m+n-1} - n(b◁a)t^{m+n-1} + (a∘b)t^{m+n}, extended
/// bilinearly. With a cocycle, adds sum_j m(m-1)...(m-j+1) α_j(a,b) δ_{m+n-j+1,0}
/// to the central coordinate (the lift to the extension with β = 0).
/// Throws WindowMismatch when the windows differ.
WindowedElement coeff_product(AlgebraSpec const &alg, WindowedElement const &x,
                              WindowedElement const &y, CocycleFamily const *cocycle = nullptr);

/// Left-symmetry of the coefficient algebra on basis triples with exponents in
/// [-window, window]. Triples where some product escapes the window are
/// counted in `skipped`; violation detail holds "m=.. n=.. p=..".
IdentityReport check_coeff_left_symmetry(AlgebraSpec const &alg, int window,
                                         CocycleFamily const *cocycle = nullptr);

} // namespace pregd
