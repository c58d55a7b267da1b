#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "slater/errors.hpp"

int main(int argc, char** argv) {
  using namespace slater::cli;

  CLI::App app{"Slater winners, minimum feedback arc sets and gadget reductions"};
  app.require_subcommand(1);

  SlaterArgs slater_args;
  auto* slater_cmd = app.add_subcommand("slater", "Slater scores and winners of a tournament");
  slater_cmd->add_option("tournament", slater_args.tournament, "Tournament file")->required();
  slater_cmd->add_option("--vertex", slater_args.vertex, "Decide whether this vertex wins");
  slater_cmd->add_option("--modules", slater_args.modules, "Module partition file");
  slater_cmd->add_option("--method", slater_args.method, "Solver")
      ->check(CLI::IsMember({"auto", "dp", "brute"}));

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Run one stage of the reduction chain");
  reduce_cmd->add_option("stage", reduce_args.stage, "Reduction stage")
      ->required()
      ->check(CLI::IsMember({"graph-to-maxmodel", "restrict", "cnf-to-tournament", "to-voters"}));
  reduce_cmd->add_option("-i,--input", reduce_args.input, "Input file")->required();
  reduce_cmd->add_option("-o,--output", reduce_args.output, "Output file (stdout if omitted)");
  reduce_cmd->add_option("--layout", reduce_args.layout, "Write gadget layout metadata here");
  reduce_cmd->add_option("--modules", reduce_args.modules, "Write the gadget module partition here");
  auto* s1 = reduce_cmd->add_option("--s1", reduce_args.s1, "Large module size");
  auto* s2 = reduce_cmd->add_option("--s2", reduce_args.s2, "Clause module size");
  s1->needs(s2);
  s2->needs(s1);
  auto* minimize = reduce_cmd->add_flag("--minimize-params", reduce_args.minimize_params,
                                        "Use the smallest feasible s1, s2 (default)");
  minimize->excludes(s1)->excludes(s2);
  reduce_cmd->add_flag("--unchecked", reduce_args.unchecked,
                       "Accept --s1/--s2 that violate the size inequalities");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property check");
  verify_cmd->add_option("check", verify_args.check, "Check to run")
      ->required()
      ->check(CLI::IsMember({"solver", "lemma1", "lemma2", "lemma4", "theorem1", "theorem2"}));
  verify_cmd->add_option("--trials", verify_args.trials, "Random trials (0: check default)");
  verify_cmd->add_option("--seed", verify_args.seed, "RNG seed");
  verify_cmd->add_option("--max-n", verify_args.max_n, "Largest random instance (0: check default)");
  verify_cmd->add_option("--instance", verify_args.instance, "Check one instance file instead");
  verify_cmd->add_option("--counterexamples", verify_args.counterexamples,
                         "Directory for counterexample files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*slater_cmd) return run_slater(slater_args, std::cout);
    if (*reduce_cmd) return run_reduce(reduce_args, std::cout);
    return run_verify(verify_args, std::cout);
  } catch (const slater::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const slater::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kExitCap;
  }
}
