#include "commands.hpp"

#include <ostream>

#include "slater/cnf_pipeline.hpp"
#include "slater/errors.hpp"
#include "slater/fas_solver.hpp"
#include "slater/gadget.hpp"
#include "slater/io.hpp"
#include "slater/seven_voters.hpp"
#include "slater/verify.hpp"

namespace slater::cli {

namespace {

template <typename Range>
std::string joined(const Range& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

// Writes to the file if given, otherwise to `out`.
void emit(const std::optional<std::string>& path, const std::string& content, std::ostream& out) {
  if (path) {
    write_file(*path, content);
  } else {
    out << content;
  }
}

BigInt parse_size(const std::string& flag, const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos ||
      (text.size() > 1 && text[0] == '0')) {
    throw InvalidInput(flag + " must be a positive integer, got '" + text + "'");
  }
  BigInt v{text};
  if (v == 0) throw InvalidInput(flag + " must be positive");
  return v;
}

SlaterResult brute_force_slater(const Tournament& t) {
  SlaterResult r;
  r.method = SolveMethod::brute_force;
  const auto best = min_fas_bruteforce(t);
  r.min_fas = best.value;
  for (Vertex v = 0; v < t.size(); ++v) {
    r.scores.push_back(min_fas_bruteforce(t, v).value);
    if (r.scores.back() == r.min_fas) r.winners.push_back(v);
  }
  if (!r.winners.empty()) r.winning_order = min_fas_bruteforce(t, r.winners.front()).order;
  return r;
}

// Builds the gadget for a DIMACS file with the distinguished variable moved
// last. Sizes come from --s1/--s2 or the minimal feasible pair.
GadgetLayout layout_for(const ReduceArgs& args, const MaxModelInstance& inst) {
  const std::size_t n = inst.cnf.num_vars;
  const std::size_t m = inst.cnf.clauses.size();
  if (args.unchecked && !args.s1) throw InvalidInput("--unchecked needs --s1 and --s2");
  ReductionParams p = args.s1 ? ReductionParams{n, m, parse_size("--s1", *args.s1),
                                                parse_size("--s2", *args.s2)}
                              : find_min_params(n, m);
  return args.unchecked ? build_gadget(inst, p) : cnf_to_tournament(inst, p);
}

void write_layout_extras(const ReduceArgs& args, const GadgetLayout& layout) {
  if (args.layout) write_file(*args.layout, to_text(layout_metadata(layout)));
  if (args.modules) write_file(*args.modules, to_text(layout.partition()));
}

void report_layout(const GadgetLayout& layout, std::ostream& out) {
  const auto& p = layout.params();
  out << "variables: " << p.n << '\n'
      << "clauses: " << p.m << '\n'
      << "s1: " << p.s1 << '\n'
      << "s2: " << p.s2 << '\n'
      << "modules: " << layout.modules().size() << '\n'
      << "vertices: " << layout.vertex_count() << '\n'
      << "designated: " << layout.designated() << '\n';
}

}  // namespace

int run_slater(const SlaterArgs& args, std::ostream& out) {
  const auto t = parse_tournament(read_file(args.tournament));
  if (args.vertex && *args.vertex >= t.size()) {
    throw InvalidInput("vertex " + std::to_string(*args.vertex) + " not in 0.." +
                       std::to_string(t.size()) + "-1");
  }
  SlaterResult r;
  if (args.modules) {
    if (args.method == "brute") throw InvalidInput("--method brute does not use --modules");
    const auto mp = parse_modules(read_file(*args.modules));
    r = slater_winners(t, mp);
  } else if (args.method == "brute") {
    SolverCaps caps;
    if (t.size() > caps.brute_force_nodes) {
      throw CapExceeded("tournament has " + std::to_string(t.size()) +
                        " candidates; brute force supports at most " +
                        std::to_string(caps.brute_force_nodes));
    }
    r = brute_force_slater(t);
  } else {
    r = slater_winners(t);
  }
  out << "candidates: " << t.size() << '\n'
      << "method: " << to_string(r.method) << '\n'
      << "min_fas: " << r.min_fas << '\n'
      << "scores: " << joined(r.scores) << '\n'
      << "winners: " << joined(r.winners) << '\n'
      << "order: " << joined(r.winning_order.sequence()) << '\n';
  if (args.vertex) {
    const auto score = r.scores[*args.vertex];
    out << "vertex: " << *args.vertex << '\n'
        << "score: " << score << '\n'
        << "winner: " << (score == r.min_fas ? "yes" : "no") << '\n';
  } else {
    out << "score: " << r.min_fas << '\n';
  }
  return kExitOk;
}

int run_reduce(const ReduceArgs& args, std::ostream& out) {
  const auto text = read_file(args.input);
  const bool sized = args.stage == "cnf-to-tournament" || args.stage == "to-voters";
  if (!sized && (args.s1 || args.minimize_params || args.unchecked || args.layout || args.modules)) {
    throw InvalidInput("size and layout options only apply to cnf-to-tournament and to-voters");
  }
  if (args.stage == "graph-to-maxmodel") {
    const auto reduced = graph_to_maxmodel(parse_graph(text));
    emit(args.output, to_text(to_dimacs(reduced.instance)), out);
    if (args.output) {
      out << "variables: " << reduced.instance.cnf.num_vars << '\n'
          << "clauses: " << reduced.instance.cnf.clauses.size() << '\n'
          << "dvar: " << reduced.instance.dvar << '\n';
    }
    return kExitOk;
  }
  if (args.stage == "restrict") {
    const auto reduced = maxmodel_to_restricted(to_instance(parse_dimacs(text)));
    emit(args.output, to_text(to_dimacs(reduced.pcnf)), out);
    if (args.output) {
      out << "variables: " << reduced.pcnf.instance.cnf.num_vars << '\n'
          << "clauses: " << reduced.pcnf.instance.cnf.clauses.size() << '\n'
          << "copies: " << reduced.copies << '\n'
          << "dvar: " << reduced.pcnf.instance.dvar << '\n';
    }
    return kExitOk;
  }
  const auto file = parse_dimacs(text);
  if (args.stage == "cnf-to-tournament") {
    const auto inst = reindex_dvar_last(to_instance(file)).instance;
    const auto layout = layout_for(args, inst);
    write_layout_extras(args, layout);
    emit(args.output, to_text(layout.materialize()), out);
    if (args.output) report_layout(layout, out);
    return kExitOk;
  }
  const auto pcnf = reindex_dvar_last(to_partitioned(file));
  const auto layout = layout_for(args, pcnf.instance);
  if (layout.vertex_count() > kMaterializeCap) {
    throw CapExceeded("profile would have " + std::to_string(layout.vertex_count()) +
                      " candidates; the limit is " + std::to_string(kMaterializeCap));
  }
  const auto voters = build_seven_voters(layout, pcnf);
  write_layout_extras(args, layout);
  emit(args.output, to_text(voters.profile), out);
  if (args.output) {
    report_layout(layout, out);
    out << "voters: " << voters.profile.voters.size() << '\n';
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& args, std::ostream& out) {
  VerifyOptions opts;
  opts.trials = args.trials;
  opts.seed = args.seed;
  opts.max_n = args.max_n;
  if (args.instance) opts.instance = *args.instance;
  opts.counterexample_dir = args.counterexamples;
  VerifyReport report;
  if (args.check == "solver") {
    report = verify_solver(opts);
  } else if (args.check == "lemma1") {
    report = verify_lemma1(opts);
  } else if (args.check == "lemma2") {
    report = verify_lemma2(opts);
  } else if (args.check == "lemma4") {
    report = verify_lemma4(opts);
  } else if (args.check == "theorem1") {
    report = verify_theorem1(opts);
  } else {
    report = verify_theorem2(opts);
  }
  for (const auto& [key, value] : report.facts) out << key << ": " << value << '\n';
  return report.passed ? kExitOk : kExitPropertyFailure;
}

}  // namespace slater::cli
