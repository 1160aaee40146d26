#include "pregd/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "pregd/cohomology.hpp"
#include "pregd/conformal.hpp"
#include "pregd/constructions.hpp"
#include "pregd/error.hpp"
#include "pregd/ideals.hpp"
#include "pregd/identities.hpp"
#include "pregd/io.hpp"

namespace pregd::cli {
namespace {

using io::Json;

// Collects the raw bytes of every input file so reports can carry one hash.
struct Inputs
{
	std::string bytes;

	Json json(std::string const &path)
	{
		auto text = io::read_file(path);
		bytes += text;
		return io::parse_json(text, path);
	}

	AlgebraSpec algebra(std::string const &path)
	{
		auto j = json(path);
		try
		{
			return io::algebra_from_json(j);
		}
		catch (ParseError const &e)
		{
			throw ParseError(path, e.what());
		}
	}

	template <class T, class F>
	T aux(std::string const &path, F const &from_json)
	{
		auto j = json(path);
		try
		{
			return from_json(j);
		}
		catch (ParseError const &e)
		{
			throw ParseError(path, e.what());
		}
	}
};

std::string format_vector(Vector const &v, AlgebraSpec const &alg)
{
	std::string s;
	for (std::size_t k = 0; k < v.size(); ++k)
	{
		if (v[k] == 0)
			continue;
		bool neg = v[k] < 0;
		if (s.empty())
			s += neg ? "-" : "";
		else
			s += neg ? " - " : " + ";
		Scalar a = abs(v[k]);
		if (a != 1)
			s += to_string(a) + "·";
		s += k < alg.dim() ? alg.basis()[k] : "e" + std::to_string(k);
	}
	return s.empty() ? "0" : s;
}

Json vector_json(Vector const &v, AlgebraSpec const &alg)
{
	Json out = Json::object();
	if (v.size() != alg.dim())
	{
		out = Json::array();
		for (auto const &x : v)
			out.push_back(to_string(x));
		return out;
	}
	for (std::size_t k = 0; k < v.size(); ++k)
		if (v[k] != 0)
			out[alg.basis()[k]] = to_string(v[k]);
	return out;
}

std::string format_span(Subspace const &s, AlgebraSpec const &alg)
{
	std::string out = "span{";
	for (std::size_t k = 0; k < s.basis().size(); ++k)
		out += (k ? ", " : "") + format_vector(s.basis()[k], alg);
	return out + "}";
}

Json span_json(Subspace const &s, AlgebraSpec const &alg)
{
	Json out = Json::array();
	for (auto const &v : s.basis())
		out.push_back(vector_json(v, alg));
	return out;
}

std::string format_cocycle(CocycleFamily const &f, AlgebraSpec const &alg)
{
	std::string s;
	for (std::size_t i = f.degree_cap + 1; i-- > 0;)
		for (std::size_t a = 0; a < alg.dim(); ++a)
			for (std::size_t b = 0; b < alg.dim(); ++b)
			{
				auto const &x = f.forms[i](a, b);
				if (x == 0)
					continue;
				s += (s.empty() ? "" : ", ") + std::string("α") + std::to_string(i) + "(" + alg.basis()[a] + "," +
				     alg.basis()[b] + ") = " + to_string(x);
			}
	return s.empty() ? "0" : s;
}

Json dense_cocycle_json(CocycleFamily const &f)
{
	Json forms = Json::array();
	for (auto const &m : f.forms)
	{
		Json rows = Json::array();
		for (std::size_t a = 0; a < m.rows(); ++a)
		{
			Json row = Json::array();
			for (std::size_t b = 0; b < m.cols(); ++b)
				row.push_back(to_string(m(a, b)));
			rows.push_back(row);
		}
		forms.push_back(rows);
	}
	return {{"degree_cap", f.degree_cap}, {"forms", forms}};
}

std::string tuple_label(std::vector<std::size_t> const &idx, AlgebraSpec const &alg)
{
	std::string s = "(";
	for (std::size_t k = 0; k < idx.size(); ++k)
		s += (k ? "," : "") + alg.basis().at(idx[k]);
	return s + ")";
}

// Shared report text and JSON for identity checks.
int emit_identity(IdentityReport const &rep, AlgebraSpec const &alg, Json report, bool json, std::ostream &out)
{
	int const code = rep.passed ? exit_ok : exit_negative;
	if (json)
	{
		Json vs = Json::array();
		for (auto const &v : rep.violations)
		{
			Json t = Json::array();
			for (auto i : v.basis)
				t.push_back(alg.basis().at(i));
			vs.push_back({{"equation", v.equation}, {"tuple", t}, {"residual", vector_json(v.residual, alg)},
			              {"detail", v.detail}});
		}
		report["identity"] = rep.identity_id;
		report["passed"] = rep.passed;
		report["checked"] = rep.checked;
		report["skipped"] = rep.skipped;
		report["violations"] = vs;
		report["exit_code"] = code;
		out << io::dump(report);
		return code;
	}
	out << (rep.passed ? "PASS " : "FAIL ") << rep.identity_id << " (" << rep.checked << " checked, " << rep.skipped
	    << " skipped)\n";
	std::size_t const shown = 20;
	for (std::size_t k = 0; k < rep.violations.size() && k < shown; ++k)
	{
		auto const &v = rep.violations[k];
		out << "  " << v.equation << " at " << tuple_label(v.basis, alg);
		if (!v.detail.empty())
			out << " [" << v.detail << "]";
		out << ": residual ";
		if (v.residual.size() == alg.dim())
			out << format_vector(v.residual, alg);
		else
			out << vector_json(v.residual, alg).dump();
		out << "\n";
	}
	if (rep.violations.size() > shown)
		out << "  ... and " << rep.violations.size() - shown << " more\n";
	return code;
}

Json base_report(std::string const &command, std::vector<std::string> const &args, Inputs const &in)
{
	return {{"command", command}, {"argv", args}, {"input_hash", io::fnv1a_hex(in.bytes)}};
}

struct Options
{
	bool json = false;
	std::string file;
	// check
	std::string identity;
	std::string derivation;
	// h2, lambda
	std::string beta;
	std::optional<std::size_t> degree_cap;
	std::string cocycle;
	// simple
	std::size_t trials = 16;
	std::uint64_t seed = 0;
	// construct
	std::string kind;
	std::string input;
	std::string output;
	std::string derivation_out;
	std::string xi = "0";
	std::string k;
	std::string c;
	std::size_t n = 0;
	std::size_t radius = 0;
	// lambda
	std::string left, right;
	// coeff-check
	int window = 3;
};

int cmd_check(Options const &o, std::vector<std::string> const &args, std::ostream &out)
{
	Inputs in;
	auto alg = in.algebra(o.file);
	auto id = parse_identity(o.identity);
	std::optional<LinearMapSpec> d;
	if (!o.derivation.empty())
		d = in.aux<LinearMapSpec>(o.derivation, [&](Json const &j) { return io::linear_map_from_json(j, alg); });
	auto rep = check_identity(alg, id, d);
	return emit_identity(rep, alg, base_report("check", args, in), o.json, out);
}

int cmd_h2(Options const &o, std::vector<std::string> const &args, std::ostream &out)
{
	Inputs in;
	auto alg = in.algebra(o.file);
	auto beta = parse_scalar(o.beta);
	auto r = h2(alg, beta, o.degree_cap);
	if (o.json)
	{
		auto report = base_report("h2", args, in);
		Json basis = Json::array(), reps = Json::array();
		for (auto const &f : r.cocycle_basis)
			basis.push_back(dense_cocycle_json(f));
		for (auto const &f : r.representatives)
			reps.push_back(dense_cocycle_json(f));
		report["beta"] = to_string(r.beta);
		report["degree_cap"] = r.degree_cap;
		report["cap_limited"] = r.cap_limited;
		report["dim_Z2"] = r.dim_Z2;
		report["dim_B2"] = r.dim_B2;
		report["dim_H2"] = r.dim_H2;
		report["cocycle_basis"] = basis;
		report["representatives"] = reps;
		report["exit_code"] = int(exit_ok);
		out << io::dump(report);
		return exit_ok;
	}
	out << "beta = " << to_string(r.beta) << ", degree cap = " << r.degree_cap
	    << (r.cap_limited ? " (given; results hold up to this cap)" : " (exact)") << "\n";
	out << "dim Z2 = " << r.dim_Z2 << "\n";
	out << "dim B2 = " << r.dim_B2 << "\n";
	out << "dim H2 = " << r.dim_H2 << "\n";
	for (std::size_t k = 0; k < r.representatives.size(); ++k)
		out << "  [" << k + 1 << "] " << format_cocycle(r.representatives[k], alg) << "\n";
	return exit_ok;
}

int cmd_simple(Options const &o, std::vector<std::string> const &args, std::ostream &out)
{
	Inputs in;
	auto alg = in.algebra(o.file);
	auto cert = certify_conformal_simplicity(alg, o.trials, o.seed);
	int const code = cert.verdict == Verdict::simple       ? exit_ok
	                 : cert.verdict == Verdict::not_simple ? exit_negative
	                                                       : exit_inconclusive;
	if (o.json)
	{
		auto report = base_report("simple", args, in);
		report["verdict"] = verdict_name(cert.verdict);
		report["criterion"] = criterion_name(cert.criterion);
		report["trials"] = cert.trials;
		report["seed"] = cert.seed;
		report["ideal"] = cert.ideal ? span_json(*cert.ideal, alg) : Json(nullptr);
		report["element"] = cert.element ? vector_json(*cert.element, alg) : Json(nullptr);
		report["log"] = cert.log;
		report["exit_code"] = code;
		out << io::dump(report);
		return code;
	}
	out << "verdict: " << verdict_name(cert.verdict) << "\n";
	out << "criterion: " << criterion_name(cert.criterion) << "\n";
	if (cert.ideal)
		out << "ideal: " << format_span(*cert.ideal, alg) << "\n";
	if (cert.element)
		out << "element: " << format_vector(*cert.element, alg) << "\n";
	out << "trials: " << cert.trials << ", seed: " << cert.seed << "\n";
	for (auto const &line : cert.log)
		out << "  " << line << "\n";
	return code;
}

int cmd_construct(Options const &o, std::vector<std::string> const &args, std::ostream &out)
{
	Inputs in;
	auto need = [](std::string const &value, char const *flag) {
		if (value.empty())
			throw ParseError(flag, "required for this kind");
		return value;
	};
	auto input = [&] { return in.algebra(need(o.input, "--input")); };
	auto derivation = [&](AlgebraSpec const &alg) {
		return in.aux<LinearMapSpec>(need(o.derivation, "--derivation"),
		                             [&](Json const &j) { return io::linear_map_from_json(j, alg); });
	};
	auto scalar = [&](std::string const &value, char const *flag) { return parse_scalar(need(value, flag)); };

	AlgebraSpec result;
	std::optional<LinearMapSpec> derivation_result;
	if (o.kind == "zinbiel-pn")
	{
		auto z = input();
		result = zinbiel_to_pre_novikov(z, derivation(z), scalar(o.xi, "--xi"));
	}
	else if (o.kind == "pn-pregd")
		result = pre_novikov_to_pre_gd(input(), scalar(o.k, "--k"));
	else if (o.kind == "zinbiel-pregd")
	{
		auto z = input();
		result = zinbiel_to_pre_gd(z, derivation(z), scalar(o.xi, "--xi"), scalar(o.k, "--k"));
	}
	else if (o.kind == "lsp-pregd")
		result = ls_poisson_to_pre_gd(input());
	else if (o.kind == "ca-np")
	{
		auto a = input();
		result = comm_assoc_derivation_to_novikov_poisson(a, derivation(a));
	}
	else if (o.kind == "rank-one")
		result = build_rank_one(scalar(o.c, "--c"));
	else if (o.kind == "current")
		result = build_current(input());
	else if (o.kind == "binomial-zinbiel" || o.kind == "laurent-slice")
	{
		if (o.kind == "binomial-zinbiel" && o.n == 0)
			throw ParseError("--n", "must be a positive integer");
		auto [alg, d] = o.kind == "binomial-zinbiel" ? truncated_binomial_zinbiel(o.n) : laurent_slice(o.radius);
		result = alg;
		derivation_result = d;
	}

	if (derivation_result && !o.derivation_out.empty())
		io::save_json(o.derivation_out, io::linear_map_to_json(*derivation_result, result));
	auto file = io::algebra_to_json(result);
	if (o.output.empty())
	{
		out << io::dump(file);
		return exit_ok;
	}
	io::save_json(o.output, file);
	if (o.json)
	{
		auto report = base_report("construct", args, in);
		report["kind"] = o.kind;
		report["output"] = o.output;
		report["output_hash"] = io::fnv1a_hex(io::dump(file));
		report["name"] = result.name();
		report["dim"] = result.dim();
		report["exit_code"] = int(exit_ok);
		out << io::dump(report);
	}
	else
		out << "wrote " << result.name() << " (dim " << result.dim() << ") to " << o.output << "\n";
	return exit_ok;
}

int cmd_lambda(Options const &o, std::vector<std::string> const &args, std::ostream &out)
{
	Inputs in;
	auto alg = in.algebra(o.file);
	auto label = [&](std::string const &l, char const *flag) {
		auto i = alg.index_of(l);
		if (!i)
			throw ParseError(flag, "unknown basis label '" + l + "'");
		return *i;
	};
	auto a = label(o.left, "--left");
	auto b = label(o.right, "--right");
	Scalar beta = o.beta.empty() ? Scalar(0) : parse_scalar(o.beta);
	std::optional<CocycleFamily> cocycle;
	if (!o.cocycle.empty())
		cocycle = in.aux<CocycleFamily>(o.cocycle, [&](Json const &j) { return io::cocycle_from_json(j, alg); });
	auto p = lambda_product(alg, ModuleElement::basis(a), ModuleElement::basis(b), cocycle ? &*cocycle : nullptr,
	                        beta);
	auto text = format_lambda_poly(p, alg);
	if (o.json)
	{
		auto report = base_report("lambda", args, in);
		report["left"] = o.left;
		report["right"] = o.right;
		report["beta"] = to_string(beta);
		report["product"] = text;
		report["exit_code"] = int(exit_ok);
		out << io::dump(report);
	}
	else
		out << text << "\n";
	return exit_ok;
}

int cmd_coeff_check(Options const &o, std::vector<std::string> const &args, std::ostream &out)
{
	Inputs in;
	auto alg = in.algebra(o.file);
	std::optional<CocycleFamily> cocycle;
	if (!o.cocycle.empty())
		cocycle = in.aux<CocycleFamily>(o.cocycle, [&](Json const &j) { return io::cocycle_from_json(j, alg); });
	auto rep = check_coeff_left_symmetry(alg, o.window, cocycle ? &*cocycle : nullptr);
	auto report = base_report("coeff-check", args, in);
	report["window"] = o.window;
	return emit_identity(rep, alg, report, o.json, out);
}

} // namespace

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Exact computations with pre-Gel'fand-Dorfman algebras and their conformal algebras.", "pregd"};
	app.require_subcommand(1);
	Options o;

	auto common = [&](CLI::App *sub, bool with_file = true) {
		if (with_file)
			sub->add_option("file", o.file, "algebra JSON file")->required();
		sub->add_flag("--json", o.json, "print a JSON report");
	};

	auto *check = app.add_subcommand("check", "check an identity system on every basis tuple");
	common(check);
	check->add_option("--identity", o.identity, "identity id, e.g. pre-gd or PRE_NOVIKOV")->required();
	check->add_option("--derivation", o.derivation, "linear map file for DERIVATION");

	auto *h2c = app.add_subcommand("h2", "second cohomology with values in the central module");
	common(h2c);
	h2c->add_option("--beta", o.beta, "rational β with ∂c = βc")->required();
	h2c->add_option("--degree-cap", o.degree_cap, "λ-degree cap; required when no spanning condition holds");

	auto *simple = app.add_subcommand("simple", "certify simplicity of the conformal algebra");
	common(simple);
	simple->add_option("--trials", o.trials, "random probe vectors")->capture_default_str();
	simple->add_option("--seed", o.seed, "probe seed")->capture_default_str();

	auto *construct = app.add_subcommand("construct", "build an algebra and write it as JSON");
	common(construct, false);
	construct->add_option("kind", o.kind, "construction")
	    ->required()
	    ->check(CLI::IsMember({"zinbiel-pn", "pn-pregd", "zinbiel-pregd", "lsp-pregd", "ca-np", "rank-one", "current",
	                           "binomial-zinbiel", "laurent-slice"}));
	construct->add_option("--input", o.input, "input algebra file");
	construct->add_option("--derivation", o.derivation, "derivation file");
	construct->add_option("--xi", o.xi, "ξ for zinbiel-pn and zinbiel-pregd")->capture_default_str();
	construct->add_option("--k", o.k, "k for pn-pregd and zinbiel-pregd");
	construct->add_option("--c", o.c, "c for rank-one");
	construct->add_option("--n", o.n, "size of binomial-zinbiel");
	construct->add_option("--radius", o.radius, "radius of laurent-slice");
	construct->add_option("-o,--output", o.output, "output file (stdout when omitted)");
	construct->add_option("--derivation-out", o.derivation_out, "write the derivation of generated examples");

	auto *lambda = app.add_subcommand("lambda", "print the λ-product of two basis elements");
	common(lambda);
	lambda->add_option("--left", o.left, "left basis label")->required();
	lambda->add_option("--right", o.right, "right basis label")->required();
	lambda->add_option("--beta", o.beta, "β for the central element");
	lambda->add_option("--cocycle", o.cocycle, "cocycle file");

	auto *coeff = app.add_subcommand("coeff-check", "left-symmetry of the coefficient algebra in a window");
	common(coeff);
	coeff->add_option("--window", o.window, "exponent window N")->capture_default_str()->check(CLI::NonNegativeNumber);
	coeff->add_option("--cocycle", o.cocycle, "cocycle file (lifted with β = 0)");

	try
	{
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	}
	catch (CLI::CallForHelp const &)
	{
		out << app.help();
		return exit_ok;
	}
	catch (CLI::ParseError const &e)
	{
		err << "error: " << e.what() << "\n";
		return exit_input;
	}

	std::map<CLI::App *, std::function<int()>> handlers = {
	    {check, [&] { return cmd_check(o, args, out); }},
	    {h2c, [&] { return cmd_h2(o, args, out); }},
	    {simple, [&] { return cmd_simple(o, args, out); }},
	    {construct, [&] { return cmd_construct(o, args, out); }},
	    {lambda, [&] { return cmd_lambda(o, args, out); }},
	    {coeff, [&] { return cmd_coeff_check(o, args, out); }},
	};
	auto fail = [&](int code, std::exception const &e) {
		err << "error: " << e.what() << "\n";
		return code;
	};
	try
	{
		return handlers.at(app.get_subcommands().front())();
	}
	catch (SpanningConditionError const &e)
	{
		return fail(exit_refused, e);
	}
	catch (NoUnitFound const &e)
	{
		return fail(exit_inconclusive, e);
	}
	catch (IdentityError const &e)
	{
		return fail(exit_negative, e);
	}
	catch (ContainmentError const &e)
	{
		return fail(exit_negative, e);
	}
	catch (Error const &e)
	{
		return fail(exit_input, e);
	}
	catch (std::exception const &e)
	{
		return fail(exit_input, e);
	}
}

} // namespace pregd::cli
