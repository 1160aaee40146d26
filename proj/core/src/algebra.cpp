#include "pregd/algebra.hpp"

#include <algorithm>
#include <set>

#include "pregd/error.hpp"

namespace pregd {

bool is_stored(Op op)
{
	return op == Op::ld || op == Op::rd || op == Op::circ || op == Op::dot;
}

std::string_view op_name(Op op)
{
	switch (op)
	{
	case Op::ld: return "ld";
	case Op::rd: return "rd";
	case Op::circ: return "circ";
	case Op::dot: return "dot";
	case Op::ast: return "ast";
	case Op::star: return "star";
	case Op::bracket: return "bracket";
	}
	return "?";
}

Op parse_op(std::string_view name)
{
	for (Op op : {Op::ld, Op::rd, Op::circ, Op::dot, Op::ast, Op::star, Op::bracket})
		if (op_name(op) == name)
			return op;
	throw UnknownOp("unknown operation '" + std::string(name) + "'");
}

bool StructureTensor::is_zero() const
{
	return std::all_of(c_.begin(), c_.end(), [](Scalar const &x) { return x == 0; });
}

AlgebraSpec::AlgebraSpec(std::string name, std::vector<std::string> basis)
    : name_(std::move(name)), basis_(std::move(basis))
{
	std::set<std::string> seen;
	for (auto const &b : basis_)
		if (!seen.insert(b).second)
			throw ParseError("basis", "duplicate basis label '" + b + "'");
}

std::optional<std::size_t> AlgebraSpec::index_of(std::string_view label) const
{
	for (std::size_t i = 0; i < basis_.size(); ++i)
		if (basis_[i] == label)
			return i;
	return std::nullopt;
}

bool AlgebraSpec::has(Op op) const { return ops_.contains(op); }

StructureTensor const *AlgebraSpec::tensor(Op op) const
{
	auto it = ops_.find(op);
	return it == ops_.end() ? nullptr : &it->second;
}

void AlgebraSpec::set(Op op, StructureTensor t)
{
	if (!is_stored(op))
		throw UnknownOp("cannot store derived operation '" + std::string(op_name(op)) + "'");
	if (t.dim() != dim())
		throw DimensionMismatch("structure tensor has dimension " + std::to_string(t.dim()) +
		                        ", algebra has " + std::to_string(dim()));
	ops_[op] = std::move(t);
}

void AlgebraSpec::erase(Op op) { ops_.erase(op); }

StructureTensor &AlgebraSpec::tensor_mut(Op op)
{
	if (!is_stored(op))
		throw UnknownOp("cannot store derived operation '" + std::string(op_name(op)) + "'");
	auto it = ops_.find(op);
	if (it == ops_.end())
		it = ops_.emplace(op, StructureTensor(dim())).first;
	return it->second;
}

void AlgebraSpec::set_product(Op op, std::size_t i, std::size_t j, Vector const &value)
{
	if (value.size() != dim() || i >= dim() || j >= dim())
		throw DimensionMismatch("set_product: index or vector length out of range");
	auto &t = tensor_mut(op);
	for (std::size_t k = 0; k < dim(); ++k)
		t(i, j, k) = value[k];
}

Vector AlgebraSpec::basis_product(Op op, std::size_t i, std::size_t j) const
{
	if (i >= dim() || j >= dim())
		throw DimensionMismatch("basis_product: index out of range");
	auto stored = [&](Op o, std::size_t a, std::size_t b) {
		auto v = zero_vector(dim());
		if (auto const *t = tensor(o))
			for (std::size_t k = 0; k < dim(); ++k)
				v[k] = (*t)(a, b, k);
		return v;
	};
	switch (op)
	{
	case Op::ast: return stored(Op::ld, i, j) + stored(Op::rd, i, j);
	case Op::star: return stored(Op::rd, i, j) + stored(Op::ld, j, i);
	case Op::bracket: return stored(Op::circ, i, j) - stored(Op::circ, j, i);
	default: return stored(op, i, j);
	}
}

Matrix AlgebraSpec::left_mult(Op op, std::size_t i) const
{
	Matrix m(dim(), dim());
	for (std::size_t j = 0; j < dim(); ++j)
	{
		auto v = basis_product(op, i, j);
		for (std::size_t k = 0; k < dim(); ++k)
			m(k, j) = v[k];
	}
	return m;
}

Matrix AlgebraSpec::right_mult(Op op, std::size_t i) const
{
	Matrix m(dim(), dim());
	for (std::size_t j = 0; j < dim(); ++j)
	{
		auto v = basis_product(op, j, i);
		for (std::size_t k = 0; k < dim(); ++k)
			m(k, j) = v[k];
	}
	return m;
}

bool AlgebraSpec::is_zero() const
{
	return std::all_of(ops_.begin(), ops_.end(), [](auto const &kv) { return kv.second.is_zero(); });
}

void AlgebraSpec::set_truncation(std::optional<Truncation> t)
{
	if (t && t->degree.size() != dim())
		throw DimensionMismatch("truncation: one degree per basis element required");
	truncation_ = std::move(t);
}

bool operator==(AlgebraSpec const &a, AlgebraSpec const &b)
{
	if (a.name_ != b.name_ || a.basis_ != b.basis_ || a.truncation_ != b.truncation_)
		return false;
	for (Op op : stored_ops)
	{
		auto const *ta = a.tensor(op);
		auto const *tb = b.tensor(op);
		bool za = ta == nullptr || ta->is_zero();
		bool zb = tb == nullptr || tb->is_zero();
		if (za != zb)
			return false;
		if (!za && !(*ta == *tb))
			return false;
	}
	return true;
}

Vector eval(AlgebraSpec const &alg, Op op, Vector const &x, Vector const &y)
{
	std::size_t const n = alg.dim();
	if (x.size() != n || y.size() != n)
		throw DimensionMismatch("eval: operand length differs from algebra dimension");
	auto out = zero_vector(n);
	auto accumulate = [&](Op stored, Vector const &u, Vector const &v, Scalar const &sign) {
		auto const *t = alg.tensor(stored);
		if (t == nullptr)
			return;
		for (std::size_t i = 0; i < n; ++i)
		{
			if (u[i] == 0)
				continue;
			for (std::size_t j = 0; j < n; ++j)
			{
				if (v[j] == 0)
					continue;
				Scalar w = sign * u[i] * v[j];
				for (std::size_t k = 0; k < n; ++k)
					if ((*t)(i, j, k) != 0)
						out[k] += w * (*t)(i, j, k);
			}
		}
	};
	switch (op)
	{
	case Op::ast:
		accumulate(Op::ld, x, y, 1);
		accumulate(Op::rd, x, y, 1);
		break;
	case Op::star:
		accumulate(Op::rd, x, y, 1);
		accumulate(Op::ld, y, x, 1);
		break;
	case Op::bracket:
		accumulate(Op::circ, x, y, 1);
		accumulate(Op::circ, y, x, -1);
		break;
	default: accumulate(op, x, y, 1);
	}
	return out;
}

LinearMapSpec linear_map_from_images(std::vector<Vector> const &images)
{
	std::size_t const n = images.size();
	Matrix m(n, n);
	for (std::size_t j = 0; j < n; ++j)
	{
		if (images[j].size() != n)
			throw DimensionMismatch("linear map: image length differs from dimension");
		for (std::size_t i = 0; i < n; ++i)
			m(i, j) = images[j][i];
	}
	return LinearMapSpec{m};
}

} // namespace pregd
