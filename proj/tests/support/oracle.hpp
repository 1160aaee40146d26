#pragma once

// Independent reference computations for cross-checking the library.

#include <vector>

#include "pregd/linalg.hpp"

namespace pregd::testing {

/// Rank by textbook Gauss-Jordan directly in Q, no integer scaling.
inline std::size_t oracle_rank(Matrix const &m)
{
	std::vector<Vector> a;
	for (std::size_t i = 0; i < m.rows(); ++i)
		a.push_back(m.row(i));
	std::size_t r = 0;
	for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c)
	{
		std::size_t p = r;
		while (p < a.size() && a[p][c] == 0)
			++p;
		if (p == a.size())
			continue;
		std::swap(a[p], a[r]);
		for (std::size_t i = 0; i < a.size(); ++i)
		{
			if (i == r || a[i][c] == 0)
				continue;
			Scalar f = a[i][c] / a[r][c];
			for (std::size_t j = c; j < m.cols(); ++j)
				a[i][j] -= f * a[r][j];
		}
		++r;
	}
	return r;
}

/// Whether two lists of vectors span the same space, via ranks only.
inline bool oracle_same_span(std::size_t n, std::vector<Vector> const &x, std::vector<Vector> const &y)
{
	Matrix mx(0, n), my(0, n), both(0, n);
	for (auto const &v : x)
	{
		mx.append_row(v);
		both.append_row(v);
	}
	for (auto const &v : y)
	{
		my.append_row(v);
		both.append_row(v);
	}
	auto rx = oracle_rank(mx);
	return rx == oracle_rank(my) && rx == oracle_rank(both);
}

} // namespace pregd::testing
