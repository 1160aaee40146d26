#include "pregd/io.hpp"

#include <fstream>
#include <sstream>

#include "pregd/error.hpp"

namespace pregd::io {
namespace {

std::string child(std::string const &where, std::string const &key) { return where + "." + key; }

Json const &field(Json const &j, char const *key, std::string const &where)
{
	if (!j.is_object())
		throw ParseError(where, "expected an object");
	auto it = j.find(key);
	if (it == j.end())
		throw ParseError(where, std::string("missing field '") + key + "'");
	return *it;
}

Scalar scalar_at(Json const &j, std::string const &where)
{
	if (!j.is_string())
		throw ParseError(where, "coefficients must be rational strings");
	try
	{
		return parse_scalar(j.get<std::string>());
	}
	catch (ParseError const &e)
	{
		throw ParseError(where, e.what());
	}
}

std::size_t label_at(AlgebraSpec const &alg, std::string const &label, std::string const &where)
{
	auto i = alg.index_of(label);
	if (!i)
		throw ParseError(where, "unknown basis label '" + label + "'");
	return *i;
}

std::pair<std::size_t, std::size_t> pair_at(AlgebraSpec const &alg, std::string const &key,
                                            std::string const &where)
{
	auto comma = key.find(',');
	if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
		throw ParseError(where, "expected a key of the form \"a,b\", got '" + key + "'");
	return {label_at(alg, key.substr(0, comma), where), label_at(alg, key.substr(comma + 1), where)};
}

// Sparse vector {label: rational} over the algebra basis.
Vector sparse_vector(Json const &j, AlgebraSpec const &alg, std::string const &where)
{
	if (!j.is_object())
		throw ParseError(where, "expected an object of coefficients");
	auto v = zero_vector(alg.dim());
	for (auto const &[label, value] : j.items())
		v[label_at(alg, label, child(where, label))] = scalar_at(value, child(where, label));
	return v;
}

Json sparse_json(Vector const &v, AlgebraSpec const &alg)
{
	Json out = Json::object();
	for (std::size_t k = 0; k < v.size(); ++k)
		if (v[k] != 0)
			out[alg.basis()[k]] = to_string(v[k]);
	return out;
}

std::string pair_key(AlgebraSpec const &alg, std::size_t i, std::size_t j)
{
	return alg.basis()[i] + "," + alg.basis()[j];
}

int int_at(Json const &j, std::string const &where)
{
	if (!j.is_number_integer())
		throw ParseError(where, "expected an integer");
	return j.get<int>();
}

} // namespace

AlgebraSpec algebra_from_json(Json const &j)
{
	std::string const root = "$";
	auto const &name = field(j, "name", root);
	if (!name.is_string())
		throw ParseError(child(root, "name"), "expected a string");
	auto const &basis_j = field(j, "basis", root);
	if (!basis_j.is_array())
		throw ParseError(child(root, "basis"), "expected an array of labels");
	std::vector<std::string> basis;
	for (std::size_t k = 0; k < basis_j.size(); ++k)
	{
		auto where = child(root, "basis") + "[" + std::to_string(k) + "]";
		if (!basis_j[k].is_string())
			throw ParseError(where, "expected a string");
		auto label = basis_j[k].get<std::string>();
		if (label.empty() || label.find(',') != std::string::npos)
			throw ParseError(where, "labels must be nonempty and contain no ','");
		basis.push_back(label);
	}
	auto const &dim = field(j, "dim", root);
	if (!dim.is_number_unsigned() || dim.get<std::size_t>() != basis.size())
		throw ParseError(child(root, "dim"), "must equal the number of basis labels");

	AlgebraSpec alg(name.get<std::string>(), basis);
	auto const &ops = field(j, "ops", root);
	if (!ops.is_object())
		throw ParseError(child(root, "ops"), "expected an object");
	for (auto const &[op_name, tensor] : ops.items())
	{
		auto where = child(child(root, "ops"), op_name);
		Op op;
		try
		{
			op = parse_op(op_name);
		}
		catch (UnknownOp const &)
		{
			throw ParseError(where, "unknown op");
		}
		if (!is_stored(op))
			throw ParseError(where, "derived ops cannot be stored");
		if (!tensor.is_object())
			throw ParseError(where, "expected an object keyed \"a,b\"");
		auto &t = alg.tensor_mut(op);
		for (auto const &[key, value] : tensor.items())
		{
			auto [a, b] = pair_at(alg, key, child(where, key));
			auto v = sparse_vector(value, alg, child(where, key));
			for (std::size_t k = 0; k < v.size(); ++k)
				t(a, b, k) = v[k];
		}
	}

	if (auto it = j.find("truncation"); it != j.end())
	{
		auto where = child(root, "truncation");
		auto const &deg = field(*it, "degree", where);
		if (!deg.is_object())
			throw ParseError(child(where, "degree"), "expected an object {label: int}");
		Truncation tr;
		tr.degree.assign(alg.dim(), 0);
		for (std::size_t k = 0; k < alg.dim(); ++k)
		{
			auto d = deg.find(alg.basis()[k]);
			if (d == deg.end())
				throw ParseError(child(where, "degree"), "missing degree of '" + alg.basis()[k] + "'");
			tr.degree[k] = int_at(*d, child(child(where, "degree"), alg.basis()[k]));
		}
		for (auto const &[label, _] : deg.items())
			label_at(alg, label, child(child(where, "degree"), label));
		tr.min_degree = int_at(field(*it, "min_degree", where), child(where, "min_degree"));
		tr.max_degree = int_at(field(*it, "max_degree", where), child(where, "max_degree"));
		if (tr.min_degree > tr.max_degree)
			throw ParseError(where, "min_degree exceeds max_degree");
		alg.set_truncation(tr);
	}
	return alg;
}

Json algebra_to_json(AlgebraSpec const &alg)
{
	Json j;
	j["name"] = alg.name();
	j["dim"] = alg.dim();
	j["basis"] = alg.basis();
	Json ops = Json::object();
	for (Op op : stored_ops)
	{
		auto const *t = alg.tensor(op);
		if (!t)
			continue;
		Json tj = Json::object();
		for (std::size_t a = 0; a < alg.dim(); ++a)
			for (std::size_t b = 0; b < alg.dim(); ++b)
			{
				auto v = alg.basis_product(op, a, b);
				if (!is_zero(v))
					tj[pair_key(alg, a, b)] = sparse_json(v, alg);
			}
		ops[std::string(op_name(op))] = tj;
	}
	j["ops"] = ops;
	if (auto const &tr = alg.truncation())
	{
		Json deg = Json::object();
		for (std::size_t k = 0; k < alg.dim(); ++k)
			deg[alg.basis()[k]] = tr->degree[k];
		j["truncation"] = {{"degree", deg}, {"min_degree", tr->min_degree}, {"max_degree", tr->max_degree}};
	}
	return j;
}

LinearMapSpec linear_map_from_json(Json const &j, AlgebraSpec const &alg)
{
	std::string const where = "$.images";
	auto const &images = field(j, "images", "$");
	if (!images.is_object())
		throw ParseError(where, "expected an object {label: image}");
	std::vector<Vector> cols(alg.dim(), zero_vector(alg.dim()));
	for (auto const &[label, image] : images.items())
		cols[label_at(alg, label, child(where, label))] = sparse_vector(image, alg, child(where, label));
	return linear_map_from_images(cols);
}

Json linear_map_to_json(LinearMapSpec const &map, AlgebraSpec const &alg)
{
	if (map.matrix.rows() != alg.dim() || map.matrix.cols() != alg.dim())
		throw DimensionMismatch("linear map does not fit the algebra");
	Json images = Json::object();
	for (std::size_t k = 0; k < alg.dim(); ++k)
	{
		auto v = map(unit_vector(alg.dim(), k));
		if (!is_zero(v))
			images[alg.basis()[k]] = sparse_json(v, alg);
	}
	return {{"images", images}};
}

CocycleFamily cocycle_from_json(Json const &j, AlgebraSpec const &alg)
{
	auto const &cap_j = field(j, "degree_cap", "$");
	if (!cap_j.is_number_unsigned())
		throw ParseError("$.degree_cap", "expected a nonnegative integer");
	auto const cap = cap_j.get<std::size_t>();
	auto f = CocycleFamily::zero(alg.dim(), cap);
	auto const &forms = field(j, "forms", "$");
	if (!forms.is_object())
		throw ParseError("$.forms", "expected an object keyed by degree");
	for (auto const &[deg, form] : forms.items())
	{
		auto where = child("$.forms", deg);
		std::size_t i = 0;
		try
		{
			std::size_t used = 0;
			i = std::stoul(deg, &used);
			if (used != deg.size())
				throw std::invalid_argument(deg);
		}
		catch (std::exception const &)
		{
			throw ParseError(where, "degree keys must be integers");
		}
		if (i > cap)
			throw ParseError(where, "degree exceeds degree_cap");
		if (!form.is_object())
			throw ParseError(where, "expected an object keyed \"a,b\"");
		for (auto const &[key, value] : form.items())
		{
			auto [a, b] = pair_at(alg, key, child(where, key));
			f.forms[i](a, b) = scalar_at(value, child(where, key));
		}
	}
	return f;
}

Json cocycle_to_json(CocycleFamily const &f, AlgebraSpec const &alg)
{
	if (f.dim() != alg.dim())
		throw DimensionMismatch("cocycle does not fit the algebra");
	Json forms = Json::object();
	for (std::size_t i = 0; i <= f.degree_cap; ++i)
	{
		Json form = Json::object();
		for (std::size_t a = 0; a < alg.dim(); ++a)
			for (std::size_t b = 0; b < alg.dim(); ++b)
				if (f.forms[i](a, b) != 0)
					form[pair_key(alg, a, b)] = to_string(f.forms[i](a, b));
		if (!form.empty())
			forms[std::to_string(i)] = form;
	}
	return {{"degree_cap", f.degree_cap}, {"forms", forms}};
}

std::string read_file(std::filesystem::path const &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw ParseError(path.string(), "cannot open file");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

Json parse_json(std::string const &text, std::string const &where)
{
	try
	{
		return Json::parse(text);
	}
	catch (Json::parse_error const &e)
	{
		throw ParseError(where, e.what());
	}
}

AlgebraSpec load_algebra(std::filesystem::path const &path)
{
	try
	{
		return algebra_from_json(parse_json(read_file(path), path.string()));
	}
	catch (ParseError const &e)
	{
		if (e.where().starts_with("$"))
			throw ParseError(path.string() + ":" + e.where(), e.what());
		throw;
	}
}

void save_json(std::filesystem::path const &path, Json const &j)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw ParseError(path.string(), "cannot write file");
	out << dump(j);
}

std::string dump(Json const &j) { return j.dump(2, ' ', false) + "\n"; }

std::string fnv1a_hex(std::string_view bytes)
{
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (unsigned char c : bytes)
	{
		h ^= c;
		h *= 0x100000001b3ULL;
	}
	static constexpr char digits[] = "0123456789abcdef";
	std::string out(16, '0');
	for (int k = 15; k >= 0; --k, h >>= 4)
		out[k] = digits[h & 0xf];
	return out;
}

} // namespace pregd::io
