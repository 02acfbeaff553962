#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "intersectra/family_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"intersecting r-uniform set-family toolkit"};
  app.require_subcommand(1);
  bool as_json = false, quiet = false;
  app.add_flag("--json", as_json, "print the machine-readable report");
  app.add_flag("--quiet", quiet, "no output; rely on the exit code");

  std::string an_file;
  std::vector<int> an_ks;
  CLI::App* analyze = app.add_subcommand("analyze", "intersection census of a family file");
  analyze->add_option("file", an_file, "family file")->required();
  analyze->add_option("--k", an_ks, "intersection sizes to count (default 1..r)")
      ->delimiter(',');

  std::string ck_file;
  int ck_n = 0, ck_r = 0;
  CLI::App* check = app.add_subcommand("check", "maximality and star-cover diagnostics");
  check->add_option("file", ck_file, "family file")->required();
  check->add_option("n", ck_n, "ground size")->required();
  check->add_option("r", ck_r, "member size")->required();

  CLI::App* construct = app.add_subcommand("construct", "emit a named family");
  construct->require_subcommand(1);
  int c_n = 0, c_r = 0, c_k = 0;
  std::string c_base, c_out;
  CLI::App* c_star = construct->add_subcommand("star", "all r-sets through point 1");
  c_star->add_option("--n", c_n, "ground size")->required();
  c_star->add_option("--r", c_r, "member size")->required();
  CLI::App* c_tuza =
      construct->add_subcommand("tuza", "singleton-maximizing pair construction");
  c_tuza->add_option("--r", c_r, "member size")->required();
  CLI::App* c_alpha =
      construct->add_subcommand("alpha-witness", "best known singleton-count witness");
  c_alpha->add_option("--r", c_r, "member size")->required();
  CLI::App* c_up =
      construct->add_subcommand("construction1", "up-closure of a base family");
  c_up->add_option("--n", c_n, "ground size")->required();
  c_up->add_option("--r", c_r, "member size")->required();
  c_up->add_option("--k", c_k, "intersection size the base targets")->required();
  c_up->add_option("--base", c_base, "base family file")->required();
  CLI::App* c_sec =
      construct->add_subcommand("section4", "non-maximal pair-cover family");
  c_sec->add_option("--n", c_n, "ground size (>= 10)")->required();
  for (CLI::App* sub : {c_star, c_tuza, c_alpha, c_up, c_sec})
    sub->add_option("--out", c_out, "write the family to this file");

  CLI::App* search = app.add_subcommand("search", "exact branch-and-bound maxima");
  search->require_subcommand(1);
  int s_n = 0, s_r = 0, s_k = 0;
  cli::SearchOptions sopt;
  sopt.budget = cli::default_budget();
  std::string s_sym = "on";
  CLI::App* s_alpha =
      search->add_subcommand("alpha", "singleton-intersection maximum at fixed n");
  s_alpha->add_option("--r", s_r, "member size")->required();
  s_alpha->add_option("--n", s_n, "ground size")->required();
  CLI::App* s_beta = search->add_subcommand("beta", "k-intersection maximum");
  s_beta->add_option("--n", s_n, "ground size")->required();
  s_beta->add_option("--r", s_r, "member size")->required();
  s_beta->add_option("--k", s_k, "intersection size")->required();
  for (CLI::App* sub : {s_alpha, s_beta}) {
    sub->add_option("--budget", sopt.budget, "node budget, 0 = unlimited");
    sub->add_option("--symmetry", s_sym, "on|off")
        ->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--workers", sopt.workers, "parallel worker count");
    sub->add_flag("--all-optima", sopt.all_optima, "collect optimal classes");
    sub->add_flag("--verify-bounds", sopt.verify_bounds, "debug bound checks");
  }

  std::string v_suite;
  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option(
            "suite", v_suite,
            "alpha-small|ekr|tuza|construction1|section4|lemma1-random|all")
      ->required();

  for (CLI::App* sub : {analyze, check, construct, c_star, c_tuza, c_alpha, c_up, c_sec,
                        search, s_alpha, s_beta, verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message; fold every parse failure into 2
    return 2;
  }
  sopt.symmetry_off = s_sym == "off";

  try {
    cli::Report rep;
    if (*analyze) {
      rep = cli::cmd_analyze(an_file, an_ks);
    } else if (*check) {
      rep = cli::cmd_check(ck_file, ck_n, ck_r);
    } else if (*construct) {
      rep = cli::cmd_construct(construct->get_subcommands().front()->get_name(), c_n, c_r,
                               c_k, c_base, c_out);
    } else if (*search) {
      rep = cli::cmd_search(search->get_subcommands().front()->get_name(), s_n, s_r, s_k,
                            sopt);
    } else {
      rep = cli::cmd_verify(v_suite, cli::default_budget());
    }
    if (!quiet) std::cout << (as_json ? rep.doc.dump(2) + "\n" : rep.text);
    return rep.pass.has_value() && !*rep.pass ? 1 : 0;
  } catch (const intersectra::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
