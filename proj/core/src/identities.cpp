#include "pregd/identities.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <utility>

#include "pregd/error.hpp"

namespace pregd {

namespace {

struct Named
{
	std::string_view name;
	Identity id;
};

constexpr std::array<Named, 13> catalog = {{
    {"LEFT_SYMMETRIC", Identity::left_symmetric},
    {"NOVIKOV", Identity::novikov},
    {"LIE", Identity::lie},
    {"ZINBIEL", Identity::zinbiel},
    {"COMM_ASSOC", Identity::comm_assoc},
    {"DERIVATION", Identity::derivation},
    {"PRE_NOVIKOV", Identity::pre_novikov},
    {"GD_COMPAT", Identity::gd_compat},
    {"PRE_GD_COMPAT", Identity::pre_gd_compat},
    {"LS_POISSON", Identity::ls_poisson},
    {"NOVIKOV_POISSON", Identity::novikov_poisson},
    {"QUADRATIC_9", Identity::quadratic_9},
    {"PRE_GD", Identity::pre_gd},
}};

using Equations = std::vector<std::pair<std::string, Vector>>;
using Triple = std::function<Equations(Vector const &, Vector const &, Vector const &)>;
using Pair = std::function<Equations(Vector const &, Vector const &)>;

// Tuples whose partial degree sums leave the window involve products that
// were cut off, so they are not evaluated.
bool admissible(AlgebraSpec const &alg, std::vector<std::size_t> const &idx)
{
	auto const &t = alg.truncation();
	if (!t)
		return true;
	auto in = [&](int d) { return d >= t->min_degree && d <= t->max_degree; };
	std::size_t const n = idx.size();
	for (unsigned mask = 1; mask < (1u << n); ++mask)
	{
		int sum = 0;
		for (std::size_t i = 0; i < n; ++i)
			if (mask & (1u << i))
				sum += t->degree[idx[i]];
		if (!in(sum))
			return false;
	}
	return true;
}

IdentityReport run_triples(AlgebraSpec const &alg, std::string id, Triple const &eqs)
{
	IdentityReport rep;
	rep.identity_id = std::move(id);
	std::size_t const n = alg.dim();
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (std::size_t c = 0; c < n; ++c)
			{
				if (!admissible(alg, {a, b, c}))
				{
					++rep.skipped;
					continue;
				}
				++rep.checked;
				for (auto &[name, res] : eqs(unit_vector(n, a), unit_vector(n, b), unit_vector(n, c)))
					if (!is_zero(res))
						rep.add(Violation{{a, b, c}, name, std::move(res), {}});
			}
	return rep;
}

IdentityReport run_pairs(AlgebraSpec const &alg, std::string id, Pair const &eqs)
{
	IdentityReport rep;
	rep.identity_id = std::move(id);
	std::size_t const n = alg.dim();
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
		{
			if (!admissible(alg, {a, b}))
			{
				++rep.skipped;
				continue;
			}
			++rep.checked;
			for (auto &[name, res] : eqs(unit_vector(n, a), unit_vector(n, b)))
				if (!is_zero(res))
					rep.add(Violation{{a, b}, name, std::move(res), {}});
		}
	return rep;
}

// Shorthand for a bound binary operation.
struct BinOp
{
	AlgebraSpec const *alg;
	Op op;
	Vector operator()(Vector const &x, Vector const &y) const { return eval(*alg, op, x, y); }
};

Equations left_symmetric_eqs(BinOp o, Vector const &a, Vector const &b, Vector const &c)
{
	return {{"left-symmetry", o(o(a, b), c) - o(a, o(b, c)) - o(o(b, a), c) + o(b, o(a, c))}};
}

Equations novikov_eqs(BinOp o, Vector const &a, Vector const &b, Vector const &c)
{
	auto eqs = left_symmetric_eqs(o, a, b, c);
	eqs.emplace_back("right-commutativity", o(o(a, b), c) - o(o(a, c), b));
	return eqs;
}

Equations comm_assoc_eqs(BinOp d, Vector const &a, Vector const &b, Vector const &c)
{
	return {{"commutativity", d(a, b) - d(b, a)}, {"associativity", d(d(a, b), c) - d(a, d(b, c))}};
}

Equations pre_novikov_eqs(AlgebraSpec const &alg, Vector const &a, Vector const &b, Vector const &c)
{
	BinOp ld{&alg, Op::ld}, rd{&alg, Op::rd};
	return {
	    {"ND1", rd(a, rd(b, c)) - rd(rd(a, b) + ld(a, b), c) - rd(b, rd(a, c)) +
	                rd(rd(b, a) + ld(b, a), c)},
	    {"ND2", rd(a, ld(b, c)) - ld(rd(a, b), c) - ld(b, ld(a, c) + rd(a, c)) + ld(ld(b, a), c)},
	    {"ND3", rd(ld(a, b) + rd(a, b), c) - ld(rd(a, c), b)},
	    {"ND4", ld(ld(a, b), c) - ld(ld(a, c), b)},
	};
}

Equations pre_gd_compat_eqs(AlgebraSpec const &alg, Vector const &a, Vector const &b, Vector const &c)
{
	BinOp ld{&alg, Op::ld}, rd{&alg, Op::rd}, o{&alg, Op::circ};
	auto br = o(a, b) - o(b, a);
	return {
	    {"compat-ld", ld(c, br) - o(a, ld(c, b)) - ld(o(b, c), a) + o(b, ld(c, a)) + ld(o(a, c), b)},
	    {"compat-rd", rd(br, c) + o(ld(a, b) + rd(a, b), c) - rd(a, o(b, c)) + o(b, rd(a, c)) -
	                      ld(o(a, c), b)},
	};
}

Equations ls_poisson_compat_eqs(BinOp d, BinOp o, Vector const &a, Vector const &b, Vector const &c)
{
	return {
	    {"compat-product", o(d(a, b), c) - d(a, o(b, c))},
	    {"compat-associator", d(o(a, b), c) - o(a, d(b, c)) - d(o(b, a), c) + o(b, d(a, c))},
	};
}

// The nine quadratic identities on (*1, circ, *2) with a *1 b = b◁a and
// a *2 b = a▷b + b◁a.
Equations quadratic_9_eqs(AlgebraSpec const &alg, Vector const &a, Vector const &b, Vector const &c)
{
	BinOp ld{&alg, Op::ld}, rd{&alg, Op::rd}, o{&alg, Op::circ};
	auto s1 = [&](Vector const &x, Vector const &y) { return ld(y, x); };
	auto s2 = [&](Vector const &x, Vector const &y) { return rd(x, y) + ld(y, x); };
	Scalar two(2);
	return {
	    {"Q1", s1(a, s1(b, c)) - s1(b, s1(a, c))},
	    {"Q2", s1(s1(a, b), c) - s1(s2(a, b), c) + s1(a, s1(b, c)) + s2(a, s1(b, c)) -
	               s1(s1(b, a), c) - s1(b, s2(a, c))},
	    {"Q3", s1(s1(a, b), c) + s1(a, s2(b, c)) - s1(s1(b, a), c) + s1(s2(b, a), c) -
	               s1(b, s1(a, c)) - s2(b, s1(a, c))},
	    {"Q4", s2(s1(a, b), c) - s2(s2(a, b), c) + s2(a, s1(b, c)) - s2(s1(b, a), c)},
	    {"Q5", two * s2(s1(a, b), c) - s2(s2(a, b), c) + s2(a, s2(b, c)) -
	               two * s2(s1(b, a), c) + s2(s2(b, a), c) - s2(b, s2(a, c))},
	    {"Q6", s2(s1(a, b), c) - s2(s1(b, a), c) + s2(s2(b, a), c) - s2(b, s1(a, c))},
	    {"Q7", s1(o(a, b), c) - o(a, s1(b, c)) - s1(a, o(b, c)) - s1(o(b, a), c) + o(b, s1(a, c)) +
	               s1(b, o(a, c))},
	    {"Q8", o(s1(a, b), c) - s2(o(a, b), c) - o(s2(a, b), c) + o(a, s1(b, c)) + s2(a, o(b, c)) -
	               o(s1(b, a), c) + s2(o(b, a), c) - o(b, s2(a, c))},
	    {"Q9", o(s1(a, b), c) - s2(o(a, b), c) + o(a, s2(b, c)) - o(s1(b, a), c) + s2(o(b, a), c) +
	               o(s2(b, a), c) - o(b, s1(a, c)) - s2(b, o(a, c))},
	};
}

std::string slot_label(Identity id, OpSlots const &slots)
{
	std::string s(identity_name(id));
	std::vector<std::string> parts;
	auto add = [&](char const *what, std::optional<Op> op) {
		if (op)
			parts.push_back(std::string(what) + "=" + std::string(op_name(*op)));
	};
	add("product", slots.product);
	add("commutative", slots.commutative);
	add("bracket", slots.bracket);
	add("novikov", slots.novikov);
	if (!parts.empty())
	{
		s += "(";
		for (std::size_t i = 0; i < parts.size(); ++i)
			s += (i ? "," : "") + parts[i];
		s += ")";
	}
	return s;
}

} // namespace

std::string_view identity_name(Identity id)
{
	for (auto const &n : catalog)
		if (n.id == id)
			return n.name;
	return "?";
}

Identity parse_identity(std::string_view name)
{
	std::string norm;
	for (char ch : name)
		norm += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
	for (auto const &n : catalog)
		if (n.name == norm)
			return n.id;
	throw UnknownIdentity("unknown identity '" + std::string(name) + "'");
}

void IdentityReport::merge(IdentityReport const &other)
{
	for (auto const &v : other.violations)
		add(v);
	checked += other.checked;
	skipped += other.skipped;
}

IdentityReport check_identity(AlgebraSpec const &alg, Identity id,
                              std::optional<LinearMapSpec> const &aux, OpSlots const &slots)
{
	std::string const label = slot_label(id, slots);
	BinOp product{&alg, slots.product.value_or(Op::circ)};
	BinOp commutative{&alg, slots.commutative.value_or(Op::dot)};
	BinOp dot{&alg, slots.product.value_or(Op::dot)};

	switch (id)
	{
	case Identity::left_symmetric:
		return run_triples(alg, label, [&](auto const &a, auto const &b, auto const &c) {
			return left_symmetric_eqs(product, a, b, c);
		});
	case Identity::novikov:
		return run_triples(alg, label, [&](auto const &a, auto const &b, auto const &c) {
			return novikov_eqs(product, a, b, c);
		});
	case Identity::lie:
		return run_triples(alg, label, [&](auto const &a, auto const &b, auto const &c) {
			auto o = product;
			return Equations{
			    {"antisymmetry", o(a, b) + o(b, a)},
			    {"jacobi", o(a, o(b, c)) + o(b, o(c, a)) + o(c, o(a, b))},
			};
		});
	case Identity::zinbiel:
		return run_triples(alg, label, [&](auto const &a, auto const &b, auto const &c) {
			return Equations{{"zinbiel", dot(a, dot(b, c)) - dot(dot(a, b) + dot(b, a), c)}};
		});
	case Identity::comm_assoc:
		return run_triples(alg, label, [&](auto const &a, auto const &b, auto const &c) {
			return comm_assoc_eqs(dot, a, b, c);
		});
	case Identity::derivation: {
		if (!aux)
			throw MissingAuxMap("DERIVATION requires a linear map");
		if (aux->matrix.rows() != alg.dim() || aux->matrix.cols() != alg.dim())
			throw DimensionMismatch("derivation matrix shape differs from algebra dimension");
		auto const &D = *aux;
		return run_pairs(alg, label, [&](auto const &a, auto const &b) {
			return Equations{{"leibniz", D(dot(a, b)) - dot(D(a), b) - dot(a, D(b))}};
		});
	}
	case Identity::pre_novikov:
		return run_triples(alg, label, [&](auto const &a, auto const &b, auto const &c) {
			return pre_novikov_eqs(alg, a, b, c);
		});
	case Identity::gd_compat: {
		BinOp nov{&alg, slots.novikov.value_or(Op::dot)};
		BinOp br{&alg, slots.bracket.value_or(Op::circ)};
		return run_triples(alg, label, [&](auto const &a, auto const &b, auto const &c) {
			return Equations{{"gd-compat", br(nov(a, b), c) - br(nov(a, c), b) + nov(br(a, b), c) -
			                                   nov(br(a, c), b) - nov(a, br(b, c))}};
		});
	}
	case Identity::pre_gd_compat:
		return run_triples(alg, label, [&](auto const &a, auto const &b, auto const &c) {
			return pre_gd_compat_eqs(alg, a, b, c);
		});
	case Identity::ls_poisson:
	case Identity::novikov_poisson: {
		bool const nov = id == Identity::novikov_poisson;
		return run_triples(alg, label, [&](auto const &a, auto const &b, auto const &c) {
			auto eqs = nov ? novikov_eqs(product, a, b, c) : left_symmetric_eqs(product, a, b, c);
			for (auto &e : comm_assoc_eqs(commutative, a, b, c))
				eqs.push_back(std::move(e));
			for (auto &e : ls_poisson_compat_eqs(commutative, product, a, b, c))
				eqs.push_back(std::move(e));
			return eqs;
		});
	}
	case Identity::quadratic_9:
		return run_triples(alg, label, [&](auto const &a, auto const &b, auto const &c) {
			return quadratic_9_eqs(alg, a, b, c);
		});
	case Identity::pre_gd:
		return run_triples(alg, label, [&](auto const &a, auto const &b, auto const &c) {
			auto eqs = pre_novikov_eqs(alg, a, b, c);
			for (auto &e : left_symmetric_eqs(BinOp{&alg, Op::circ}, a, b, c))
				eqs.push_back(std::move(e));
			for (auto &e : pre_gd_compat_eqs(alg, a, b, c))
				eqs.push_back(std::move(e));
			return eqs;
		});
	}
	throw UnknownIdentity("unhandled identity");
}

bool is_pre_gd(AlgebraSpec const &alg) { return check_identity(alg, Identity::pre_gd).passed; }

// ---------------------------------------------------------------- representations

Matrix RepresentationSpec::at(std::string const &name, Vector const &x) const
{
	auto it = maps.find(name);
	if (it == maps.end())
		throw MissingMaps("representation has no map '" + name + "'");
	if (it->second.size() != x.size())
		throw DimensionMismatch("representation map count differs from algebra dimension");
	Matrix m(module_dim, module_dim);
	for (std::size_t i = 0; i < x.size(); ++i)
		if (x[i] != 0)
			m = m + x[i] * it->second[i];
	return m;
}

IdentityReport check_representation(AlgebraSpec const &alg, RepresentationSpec const &rep,
                                    RepKind kind, RepSlots const &slots)
{
	std::size_t const n = alg.dim();
	std::size_t const m = rep.module_dim;
	std::vector<std::string> needed = {"l", "r"};
	if (kind == RepKind::gd)
		needed.emplace_back("rho");
	for (auto const &name : needed)
	{
		auto it = rep.maps.find(name);
		if (it == rep.maps.end())
			throw MissingMaps("representation has no map '" + name + "'");
		if (it->second.size() != n)
			throw MissingMaps("map '" + name + "' needs one matrix per basis element");
		for (auto const &mat : it->second)
			if (mat.rows() != m || mat.cols() != m)
				throw DimensionMismatch("map '" + name + "' has a matrix of the wrong shape");
	}

	IdentityReport out;
	out.identity_id = kind == RepKind::novikov ? "NOVIKOV_REPRESENTATION" : "GD_REPRESENTATION";
	BinOp nov{&alg, slots.novikov};
	BinOp br{&alg, slots.bracket};
	auto l = [&](Vector const &x) { return rep.at("l", x); };
	auto r = [&](Vector const &x) { return rep.at("r", x); };
	auto rho = [&](Vector const &x) { return rep.at("rho", x); };

	for (std::size_t ia = 0; ia < n; ++ia)
		for (std::size_t ib = 0; ib < n; ++ib)
		{
			auto a = unit_vector(n, ia);
			auto b = unit_vector(n, ib);
			std::vector<std::pair<std::string, Matrix>> eqs = {
			    {"l-commutator", l(nov(a, b) - nov(b, a)) - (l(a) * l(b) - l(b) * l(a))},
			    {"l-r-mixed", l(a) * r(b) - r(b) * l(a) - r(nov(a, b)) + r(b) * r(a)},
			    {"l-right-commutative", l(nov(a, b)) - r(b) * l(a)},
			    {"r-commute", r(a) * r(b) - r(b) * r(a)},
			};
			if (kind == RepKind::gd)
			{
				eqs.emplace_back("rho-lie", rho(br(a, b)) - (rho(a) * rho(b) - rho(b) * rho(a)));
				eqs.emplace_back("rho-l", rho(a) * l(b) + rho(nov(b, a)) + l(br(b, a)) -
				                              r(a) * rho(b) - l(b) * rho(a));
				eqs.emplace_back("rho-r", rho(a) * r(b) - rho(b) * r(a) - r(b) * rho(a) +
				                              r(a) * rho(b) - r(br(a, b)));
			}
			++out.checked;
			for (auto const &[name, mat] : eqs)
				for (std::size_t v = 0; v < m; ++v)
				{
					Vector col(m);
					for (std::size_t i = 0; i < m; ++i)
						col[i] = mat(i, v);
					if (!is_zero(col))
						out.add(Violation{{ia, ib, v}, name, std::move(col), {}});
				}
		}
	return out;
}

RepresentationSpec regular_representation(AlgebraSpec const &alg, RepKind kind)
{
	RepresentationSpec rep;
	rep.module_dim = alg.dim();
	for (std::size_t i = 0; i < alg.dim(); ++i)
	{
		rep.maps["l"].push_back(alg.left_mult(Op::rd, i));
		rep.maps["r"].push_back(alg.right_mult(Op::ld, i));
		if (kind == RepKind::gd)
			rep.maps["rho"].push_back(alg.left_mult(Op::circ, i));
	}
	return rep;
}

RepresentationSpec zero_representation(std::size_t alg_dim, std::size_t module_dim, RepKind kind)
{
	RepresentationSpec rep;
	rep.module_dim = module_dim;
	std::vector<Matrix> zeros(alg_dim, Matrix(module_dim, module_dim));
	rep.maps["l"] = zeros;
	rep.maps["r"] = zeros;
	if (kind == RepKind::gd)
		rep.maps["rho"] = zeros;
	return rep;
}

AlgebraSpec associated(AlgebraSpec const &alg, RepKind which)
{
	if (!alg.has(Op::ld) && !alg.has(Op::rd))
		throw MissingOps("associated algebra needs ld or rd");
	AlgebraSpec out(alg.name() + (which == RepKind::novikov ? "-novikov" : "-gd"), alg.basis());
	std::size_t const n = alg.dim();
	Op const product_slot = which == RepKind::novikov ? Op::circ : Op::dot;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			out.set_product(product_slot, i, j, alg.basis_product(Op::ast, i, j));
			if (which == RepKind::gd)
				out.set_product(Op::circ, i, j, alg.basis_product(Op::bracket, i, j));
		}
	return out;
}

} // namespace pregd
