#include "pregd/cocycle.hpp"

#include <algorithm>

#include "pregd/error.hpp"

namespace pregd {

CocycleFamily CocycleFamily::zero(std::size_t dim, std::size_t degree_cap)
{
	return CocycleFamily{degree_cap, std::vector<Matrix>(degree_cap + 1, Matrix(dim, dim))};
}

Scalar CocycleFamily::value(std::size_t i, Vector const &x, Vector const &y) const
{
	if (i > degree_cap)
		return 0;
	auto const &f = forms.at(i);
	if (x.size() != f.rows() || y.size() != f.cols())
		throw DimensionMismatch("cocycle: argument length differs from form size");
	Scalar s = 0;
	for (std::size_t a = 0; a < x.size(); ++a)
	{
		if (x[a] == 0)
			continue;
		for (std::size_t b = 0; b < y.size(); ++b)
			if (y[b] != 0 && f(a, b) != 0)
				s += x[a] * y[b] * f(a, b);
	}
	return s;
}

bool CocycleFamily::is_zero() const
{
	return std::all_of(forms.begin(), forms.end(), [](Matrix const &m) { return m.is_zero(); });
}

Vector CocycleFamily::coordinates() const
{
	std::size_t const n = dim();
	Vector v = zero_vector((degree_cap + 1) * n * n);
	for (std::size_t i = 0; i <= degree_cap; ++i)
		for (std::size_t a = 0; a < n; ++a)
			for (std::size_t b = 0; b < n; ++b)
				v[cocycle_index(n, degree_cap, i, a, b)] = forms[i](a, b);
	return v;
}

CocycleFamily CocycleFamily::from_coordinates(std::size_t dim, std::size_t degree_cap, Vector const &v)
{
	if (v.size() != (degree_cap + 1) * dim * dim)
		throw DimensionMismatch("cocycle coordinates have the wrong length");
	auto c = zero(dim, degree_cap);
	for (std::size_t i = 0; i <= degree_cap; ++i)
		for (std::size_t a = 0; a < dim; ++a)
			for (std::size_t b = 0; b < dim; ++b)
				c.forms[i](a, b) = v[cocycle_index(dim, degree_cap, i, a, b)];
	return c;
}

CocycleFamily CocycleFamily::with_cap(std::size_t cap) const
{
	auto c = zero(dim(), cap);
	for (std::size_t i = 0; i <= degree_cap; ++i)
	{
		if (i > cap)
		{
			if (!forms[i].is_zero())
				throw DimensionMismatch("cocycle has a nonzero form above the requested cap");
			continue;
		}
		c.forms[i] = forms[i];
	}
	return c;
}

} // namespace pregd
