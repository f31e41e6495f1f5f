// Command-line surface for the loop-homology BV toolkit: expression
// evaluation, Delta/bracket table generation, and the exhaustive
// verification suites. Exit codes: 0 success / all checks pass, 1 a
// verification suite failed, 2 usage or input error.

#include "loopbv/json_io.hpp"
#include "loopbv/loopbv.hpp"
#include "loopbv/parse.hpp"
#include "loopbv/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

loopbv::Basis parse_basis(const std::string &name)
{
	if (name == "intersection")
		return loopbv::Basis::intersection;
	if (name == "pontrjagin")
		return loopbv::Basis::pontrjagin;
	if (name == "symplectic")
		return loopbv::Basis::symplectic;
	throw loopbv::Error("unknown basis '" + name + "'");
}

int run_eval(const loopbv::RunConfig &cfg)
{
	loopbv::Element result =
	    loopbv::eval_string(cfg.expr, cfg.signature(), cfg.basis);
	std::cout << loopbv::to_string(result) << "\n";
	return 0;
}

int run_table(const loopbv::RunConfig &cfg)
{
	loopbv::emit_table(cfg);
	return 0;
}

int run_verify(const loopbv::RunConfig &cfg)
{
	auto results = loopbv::verify::run_suites(cfg);
	bool all_pass = true;
	for (const auto &r : results)
	{
		if (!r.applicable)
		{
			std::printf("[SKIP] %-28s %s\n", r.name.c_str(), r.note.c_str());
			continue;
		}
		all_pass = all_pass && r.pass;
		std::printf("[%s] %-28s n=%d k=%d bound=%d  instances=%llu  (%.2fs)\n",
		            r.pass ? "PASS" : "FAIL", r.name.c_str(), cfg.n, cfg.k,
		            cfg.bound,
		            static_cast<unsigned long long>(r.instances), r.seconds);
		if (!r.pass)
			std::printf("       counterexample: %s\n",
			            r.counterexample.c_str());
	}
	return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact Batalin-Vilkovisky algebra computations on the loop "
	             "homology of SU(n+1) and complex Stiefel manifolds"};
	app.require_subcommand(1);

	loopbv::RunConfig cfg;
	cfg.workers = loopbv::default_workers();
	std::string basis_name = "intersection";

	auto add_signature = [&](CLI::App *cmd) {
		cmd->add_option("--n", cfg.n, "rank parameter n (SU(n+1))")
		    ->required();
		cmd->add_option("--k", cfg.k,
		                "Stiefel cut k (1 <= k <= n; k=1 is SU(n+1))")
		    ->default_val(1);
	};

	CLI::App *eval = app.add_subcommand(
	    "eval", "parse and evaluate an element expression");
	add_signature(eval);
	eval->add_option("--expr", cfg.expr, "expression, e.g. '{a3*e2, e2}'")
	    ->required();
	eval->add_option("--basis", basis_name,
	                 "intersection | pontrjagin | symplectic")
	    ->default_val("intersection");

	CLI::App *table = app.add_subcommand(
	    "table", "emit the Delta and bracket tables over the monomial basis");
	add_signature(table);
	table->add_option("--bound", cfg.bound,
	                  "even-part weight bound of the monomial basis")
	    ->required();
	table->add_option("--format", cfg.format, "json | latex")
	    ->default_val("json");
	table->add_option("--out", cfg.out_path, "output path")->required();

	CLI::App *verify = app.add_subcommand(
	    "verify", "run exhaustive verification suites");
	add_signature(verify);
	verify->add_option("--bound", cfg.bound, "even-part weight bound")
	    ->default_val(4);
	verify
	    ->add_option("--suite", cfg.suite,
	                 "suite name or 'all' (see --list-suites)")
	    ->default_val("all");
	verify->add_option("--workers", cfg.workers, "worker thread count");
	bool list_suites = false;
	verify->add_flag("--list-suites", list_suites, "list suite names");

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		app.exit(e);
		return 2;
	}

	try
	{
		cfg.basis = parse_basis(basis_name);
		cfg.validate();
		if (list_suites)
		{
			for (const auto &name : loopbv::verify::suite_names())
				std::cout << name << "\n";
			return 0;
		}
		if (eval->parsed())
			return run_eval(cfg);
		if (table->parsed())
			return run_table(cfg);
		if (verify->parsed())
			return run_verify(cfg);
	}
	catch (const loopbv::Error &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
