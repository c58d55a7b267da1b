#include "slater/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "slater/cnf_pipeline.hpp"
#include "slater/errors.hpp"
#include "slater/gadget.hpp"
#include "slater/io.hpp"
#include "slater/random.hpp"
#include "slater/seven_voters.hpp"
#include "slater/suite.hpp"

namespace slater {

namespace {

std::size_t or_default(std::size_t value, std::size_t fallback) {
  return value == 0 ? fallback : value;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Recorder {
 public:
  Recorder(VerifyReport& report, const VerifyOptions& opts, std::string check)
      : report_(report), opts_(opts), check_(std::move(check)) {
    report_.fact("check", check_);
  }

  // Marks the run failed, saves the counterexample and notes why.
  void fail(const std::string& reason, const std::string& content) {
    report_.passed = false;
    const auto path =
        opts_.counterexample_dir / (check_ + "-" + std::to_string(++failures_) + ".txt");
    std::filesystem::create_directories(opts_.counterexample_dir);
    write_file(path, content);
    report_.counterexamples.push_back(path);
    report_.fact("failure", reason + " (" + path.string() + ")");
  }

  void finish(std::size_t instances) {
    report_.fact("instances", std::to_string(instances));
    report_.fact("failures", std::to_string(failures_));
    report_.fact("status", report_.passed ? "pass" : "fail");
  }

 private:
  VerifyReport& report_;
  const VerifyOptions& opts_;
  std::string check_;
  std::size_t failures_ = 0;
};

// Every tournament on n vertices, indexed by the bits of its upper triangle.
Tournament tournament_from_bits(std::size_t n, std::uint64_t bits) {
  auto t = Tournament::transitive(n);
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++k) {
      if ((bits >> k) & 1U) t.orient(v, u);
    }
  }
  return t;
}

// Empty string if the solvers agree on every forced_last choice.
std::string compare_solvers(const Tournament& t, const SolverCaps& caps) {
  std::ostringstream why;
  const auto g = WeightedDigraph::from_tournament(t);
  const auto table = forced_last_table(g, caps);
  const auto check = [&](std::optional<Vertex> last) {
    const auto bf = min_fas_bruteforce(g, last, caps);
    const auto dp = min_fas_dp(g, last, caps);
    const auto label = last ? "forced_last " + std::to_string(*last) : std::string("free");
    if (bf.value != dp.value) {
      why << label << ": brute force " << bf.value << ", dp " << dp.value << "; ";
    } else if (bf.order != dp.order) {
      why << label << ": optimal orders differ; ";
    } else if (weighted_fas(g, dp.order) != dp.value) {
      why << label << ": dp order does not realize its value; ";
    }
    const Weight tabled = last ? table.forced_last[*last] : table.optimum;
    if (tabled != bf.value) why << label << ": table " << tabled << ", brute force " << bf.value << "; ";
  };
  check(std::nullopt);
  for (Vertex v = 0; v < t.size(); ++v) check(v);
  return why.str();
}

// Minimum fas over orders that keep every class contiguous, by enumerating
// class orders and every internal order.
std::size_t min_contiguous_fas(const Tournament& t, const ModulePartition& mp) {
  std::vector<std::vector<Vertex>> inner = mp.classes();
  for (auto& c : inner) std::sort(c.begin(), c.end());
  std::vector<std::size_t> cls(mp.class_count());
  for (std::size_t c = 0; c < cls.size(); ++c) cls[c] = c;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  // Internal orders are independent of the class order, so each class's
  // permutations are walked with an odometer over next_permutation.
  do {
    std::vector<std::vector<Vertex>> state = inner;
    while (true) {
      std::vector<Vertex> seq;
      for (const auto c : cls) seq.insert(seq.end(), state[c].begin(), state[c].end());
      best = std::min(best, fas_size(t, LinearOrder(std::move(seq))));
      std::size_t c = 0;
      while (c < state.size() && !std::next_permutation(state[c].begin(), state[c].end())) ++c;
      if (c == state.size()) break;
    }
  } while (std::next_permutation(cls.begin(), cls.end()));
  return best;
}

std::string describe(const Tournament& t, const ModulePartition& mp) {
  return to_text(t) + to_text(mp);
}

MaxModelInstance load_instance(const std::filesystem::path& path) {
  return to_instance(parse_dimacs(read_file(path)));
}

std::vector<NamedInstance> gadget_suite(const VerifyOptions& opts) {
  if (!opts.instance) return bundled_suite();
  auto inst = load_instance(*opts.instance);
  return {{opts.instance->filename().string(), reindex_dvar_last(inst).instance}};
}

std::string histogram(const std::map<int, std::size_t>& h) {
  std::string out;
  for (const auto& [margin, count] : h) {
    if (!out.empty()) out += ' ';
    out += std::to_string(margin) + ":" + std::to_string(count);
  }
  return out.empty() ? "none" : out;
}

// Module-level majority of some voters' module orders; nullopt on a tie.
std::optional<Tournament> module_majority(std::size_t k,
                                          const std::vector<const std::vector<std::size_t>*>& voters) {
  std::vector<int> margin(k * k, 0);
  for (const auto* order : voters) {
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = x + 1; y < k; ++y) {
        ++margin[(*order)[x] * k + (*order)[y]];
        --margin[(*order)[y] * k + (*order)[x]];
      }
    }
  }
  auto t = Tournament::transitive(k);
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = a + 1; b < k; ++b) {
      if (margin[a * k + b] == 0) return std::nullopt;
      if (margin[a * k + b] < 0) t.orient(b, a);
    }
  }
  return t;
}

}  // namespace

VerifyReport verify_solver(const VerifyOptions& opts) {
  VerifyReport report;
  Recorder rec(report, opts, "solver");
  const std::size_t trials = or_default(opts.trials, 500);
  const std::size_t max_n = or_default(opts.max_n, 8);
  if (max_n > opts.caps.brute_force_nodes) {
    throw CapExceeded("solver check uses brute force, limited to " +
                      std::to_string(opts.caps.brute_force_nodes) + " vertices");
  }
  std::size_t count = 0;
  const auto run = [&](const Tournament& t) {
    ++count;
    const auto why = compare_solvers(t, opts.caps);
    if (!why.empty()) rec.fail(why, to_text(t));
  };
  if (opts.instance) {
    run(parse_tournament(read_file(*opts.instance)));
  } else {
    std::size_t exhaustive = 0;
    for (std::size_t n = 1; n <= std::min<std::size_t>(4, max_n); ++n) {
      const std::size_t pairs = n * (n - 1) / 2;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        run(tournament_from_bits(n, bits));
        ++exhaustive;
      }
    }
    report.fact("exhaustive", std::to_string(exhaustive));
    Rng rng(opts.seed);
    for (std::size_t k = 0; k < trials; ++k) {
      run(random_tournament(rng, 1 + uniform_below(rng, max_n)));
    }
    report.fact("random", std::to_string(trials));
  }
  rec.finish(count);
  return report;
}

VerifyReport verify_lemma1(const VerifyOptions& opts) {
  if (opts.instance) throw InvalidInput("lemma1 generates its own instances");
  VerifyReport report;
  Recorder rec(report, opts, "lemma1");
  const std::size_t trials = or_default(opts.trials, 200);
  const std::size_t max_n = or_default(opts.max_n, 9);
  if (max_n < 3) throw InvalidInput("lemma1 needs --max-n of at least 3");
  if (max_n > opts.caps.brute_force_nodes) {
    throw CapExceeded("lemma1 check uses brute force, limited to " +
                      std::to_string(opts.caps.brute_force_nodes) + " vertices");
  }
  Rng rng(opts.seed);
  std::size_t steps = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    const auto n = 3 + uniform_below(rng, max_n - 2);
    const auto classes = 2 + uniform_below(rng, 2);
    const auto planted = random_planted_modules(rng, n, classes, false);
    const auto& t = planted.tournament;
    const auto& mp = planted.partition;
    std::ostringstream why;

    const auto start = random_order(rng, n);
    std::vector<BlockMove> trace;
    const auto merged = contiguize(t, mp, start, &trace);
    steps += trace.size();
    if (fas_size(t, merged) > fas_size(t, start)) why << "contiguize increased the fas; ";
    if (!is_module_contiguous(mp, merged)) why << "contiguize output not contiguous; ";
    for (const auto& step : trace) {
      if (step.applied_delta() > 0) why << "a merge step increased the fas; ";
    }

    const auto optimum = min_fas_bruteforce(t, std::nullopt, opts.caps);
    const auto contiguous = min_contiguous_fas(t, mp);
    if (static_cast<Weight>(contiguous) != optimum.value) {
      why << "min contiguous fas " << contiguous << " != min fas " << optimum.value << "; ";
    }
    const auto from_optimum = contiguize(t, mp, optimum.order);
    if (static_cast<Weight>(fas_size(t, from_optimum)) != optimum.value) {
      why << "contiguize changed the fas of an optimal order; ";
    }
    const auto s = why.str();
    if (!s.empty()) rec.fail(s, describe(t, mp) + "order " + to_text(Profile{n, {start}}));
  }
  report.fact("merge_steps", std::to_string(steps));
  rec.finish(trials);
  return report;
}

VerifyReport verify_lemma2(const VerifyOptions& opts) {
  VerifyReport report;
  Recorder rec(report, opts, "lemma2");
  const std::size_t trials = or_default(opts.trials, 20);
  const std::size_t max_n = or_default(opts.max_n, 4);
  std::size_t count = 0;
  std::size_t odd = 0;
  const auto run = [&](const Graph& g) {
    ++count;
    const auto parity = max_independent_set_parity(g);
    const auto reduced = graph_to_maxmodel(g);
    const auto verdict = max_model_decide(reduced.instance);
    odd += parity.odd ? 1 : 0;
    if (verdict.decision != parity.odd) {
      rec.fail("max independent set " + std::to_string(parity.max_size) + " but Max Model says " +
                   yes_no(verdict.decision),
               to_text(g));
    }
  };
  if (opts.instance) {
    run(parse_graph(read_file(*opts.instance)));
  } else {
    std::size_t exhaustive = 0;
    for (std::size_t n = 1; n <= std::min<std::size_t>(3, max_n); ++n) {
      const std::size_t pairs = n * (n - 1) / 2;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        Graph g(n);
        std::size_t e = 0;
        for (Vertex u = 0; u < n; ++u) {
          for (Vertex v = u + 1; v < n; ++v, ++e) {
            if ((bits >> e) & 1U) g.add_edge(u, v);
          }
        }
        run(g);
        ++exhaustive;
      }
    }
    report.fact("exhaustive", std::to_string(exhaustive));
    if (max_n > 3) {
      Rng rng(opts.seed);
      for (std::size_t k = 0; k < trials; ++k) run(random_graph(rng, max_n));
      report.fact("random", std::to_string(trials) + " graphs on " + std::to_string(max_n) +
                                " vertices");
    }
  }
  report.fact("odd", std::to_string(odd));
  rec.finish(count);
  return report;
}

VerifyReport verify_lemma4(const VerifyOptions& opts) {
  VerifyReport report;
  Recorder rec(report, opts, "lemma4");
  const std::size_t trials = or_default(opts.trials, 50);
  const std::size_t max_n = or_default(opts.max_n, 4);
  std::size_t count = 0;
  const auto run = [&](const MaxModelInstance& inst) {
    ++count;
    std::ostringstream why;
    const auto out = maxmodel_to_restricted(inst);
    try {
      out.pcnf.validate();
    } catch (const InvalidInput& e) {
      why << "output violates the partition invariants: " << e.what() << "; ";
    }
    if (!out.pcnf.variable_once_in_left()) why << "a variable repeats in L; ";
    if (!evaluate(out.pcnf.instance.cnf, Assignment(out.pcnf.instance.cnf.num_vars))) {
      why << "all-False does not satisfy the output; ";
    }
    const auto in_verdict = max_model_decide(inst);
    const auto out_verdict = max_model_decide(out.pcnf.instance);
    if (in_verdict.decision != out_verdict.decision) why << "decisions differ; ";
    if (out_verdict.max_weight != out.copies * in_verdict.max_weight) {
      why << "max weight " << out_verdict.max_weight << " != " << out.copies << " x "
          << in_verdict.max_weight << "; ";
    }
    const auto s = why.str();
    if (!s.empty()) rec.fail(s, to_text(to_dimacs(inst)));
  };
  if (opts.instance) {
    run(load_instance(*opts.instance));
  } else {
    Rng rng(opts.seed);
    for (std::size_t k = 0; k < trials;) {
      const auto inst = random_maxmodel_instance(rng, max_n, 4);
      if (inst.cnf.clauses.empty()) continue;
      run(inst);
      ++k;
    }
  }
  rec.finish(count);
  return report;
}

VerifyReport verify_theorem1(const VerifyOptions& opts) {
  VerifyReport report;
  Recorder rec(report, opts, "theorem1");
  const std::size_t samples = or_default(opts.trials, 20);
  Rng rng(opts.seed);
  const auto suite = gadget_suite(opts);
  for (const auto& [name, inst] : suite) {
    std::ostringstream why;
    const auto p = find_min_params(inst.cnf.num_vars, inst.cnf.clauses.size());
    const auto layout = cnf_to_tournament(inst, p);
    const auto oracle = max_model_decide(inst);
    const bool slater = decide_designated(inst, p, opts.caps);
    if (slater != oracle.decision) why << "designated vertex verdict differs from Max Model; ";

    const auto optimum = min_fas_dp(layout.quotient(), std::nullopt, opts.caps);
    const auto extracted = ordering_to_assignment(layout, optimum.order);
    if (const auto bad = structure_violation(layout, optimum.order)) why << *bad << "; ";
    if (!evaluate(inst.cnf, extracted)) {
      why << "optimal ordering gives an unsatisfying assignment; ";
    } else {
      if (extracted.weight() != oracle.max_weight) {
        why << "extracted weight " << extracted.weight() << " != max weight "
            << oracle.max_weight << "; ";
      }
      const BigInt fas = optimum.value;
      if (fas < quotient_lower_bound(p) || fas > assignment_bound(p, extracted)) {
        why << "optimal fas " << fas << " outside [n s1^2, Bound(a)]; ";
      }
    }

    // Bound checks on sampled satisfying assignments plus all-False.
    std::vector<std::uint64_t> models;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.cnf.num_vars); ++mask) {
      if (evaluate(inst.cnf, Assignment::from_mask(inst.cnf.num_vars, mask))) models.push_back(mask);
    }
    std::size_t bound_checks = 0;
    const auto check_bound = [&](const Assignment& a) {
      ++bound_checks;
      const auto g = assignment_to_ordering(layout, a);
      if (BigInt(g.fas) > g.bound) why << "ordering fas " << g.fas << " exceeds Bound " << g.bound << "; ";
      if (!(ordering_to_assignment(layout, g.order) == a)) why << "ordering round trip failed; ";
    };
    const Assignment none(inst.cnf.num_vars);
    check_bound(none);
    const auto b0 = assignment_bound(p, none);
    const auto baseline = baseline_bound(p);
    if (b0 > baseline || ((b0 == baseline) != (p.n == 1))) {
      why << "all-False bound " << b0 << " vs baseline " << baseline << "; ";
    }
    for (std::size_t k = 0; k < samples; ++k) {
      check_bound(Assignment::from_mask(inst.cnf.num_vars, models[uniform_below(rng, models.size())]));
    }

    report.fact("instance", name + " oracle " + yes_no(oracle.decision) + ", slater " + yes_no(slater) +
                          ", s1 " + p.s1.str() + ", s2 " + p.s2.str() + ", bound checks " +
                          std::to_string(bound_checks));
    const auto s = why.str();
    if (!s.empty()) rec.fail(name + ": " + s, to_text(to_dimacs(inst)));
  }
  rec.finish(suite.size());
  return report;
}

VerifyReport verify_theorem2(const VerifyOptions& opts) {
  VerifyReport report;
  Recorder rec(report, opts, "theorem2");
  std::vector<std::pair<std::string, PartitionedCnf>> cases;
  if (opts.instance) {
    const auto f = parse_dimacs(read_file(*opts.instance));
    const auto pcnf = f.sides ? to_partitioned(f)
                              : maxmodel_to_restricted(to_instance(f)).pcnf;
    cases.emplace_back(opts.instance->filename().string(), reindex_dvar_last(pcnf));
  } else {
    for (const auto& [name, inst] : bundled_suite()) {
      if (inst.cnf.clauses.empty()) continue;
      cases.emplace_back(name, reindex_dvar_last(maxmodel_to_restricted(inst).pcnf));
    }
  }
  // Which voters can be dropped without losing exactness on every case.
  std::array<bool, 7> needed{};
  std::map<int, std::size_t> margins;
  for (const auto& [name, pcnf] : cases) {
    std::ostringstream why;
    const std::size_t n = pcnf.instance.cnf.num_vars;
    const std::size_t m = pcnf.instance.cnf.clauses.size();
    // Realization does not depend on module sizes, so the vertex-level
    // comparison runs at s1 = s2 = 1.
    const auto layout = build_gadget(pcnf.instance, ReductionParams{n, m, 1, 1});
    const auto voters = build_seven_voters(layout, pcnf);
    const auto majority = aggregate_majority(voters.profile);
    const auto target = layout.materialize();
    if (!(majority.tournament == target)) why << "majority differs from the gadget tournament; ";
    if (!verify_modules(target, layout.partition())) why << "a gadget module is not a module; ";
    for (Vertex u = 0; u < target.size(); ++u) {
      for (Vertex v = u + 1; v < target.size(); ++v) ++margins[std::abs(majority.margins.margin(u, v))];
    }
    const auto& orders = voters.plan.module_orders;
    if (induced_module_pairs(orders[1], orders[2]) != target_x0(layout)) why << "voters 2,3 do not induce X0; ";
    if (induced_module_pairs(orders[3], orders[4]) != target_x1(layout, pcnf)) why << "voters 4,5 do not induce X1; ";
    if (induced_module_pairs(orders[5], orders[6]) != target_x2(layout, pcnf)) why << "voters 6,7 do not induce X2; ";
    if (!realizes_at_module_level(layout, voters.profile)) why << "module-level majority differs; ";

    const std::size_t k = layout.modules().size();
    for (std::size_t drop = 0; drop < 7; ++drop) {
      std::vector<const std::vector<std::size_t>*> rest;
      for (std::size_t v = 0; v < 7; ++v) {
        if (v != drop) rest.push_back(&orders[v]);
      }
      const auto t = module_majority(k, rest);
      if (!t || !(*t == layout.module_tournament())) needed[drop] = true;
    }

    report.fact("instance", name + " " + std::to_string(layout.vertex_count()) + " vertices, " + std::to_string(k) +
                          " modules, exact " + yes_no(why.str().empty()));
    const auto s = why.str();
    if (!s.empty()) rec.fail(name + ": " + s, to_text(to_dimacs(pcnf)));
  }
  if (!opts.instance && !cases.empty() && !std::all_of(needed.begin(), needed.end(), [](bool b) { return b; })) {
    rec.fail("some voter can be removed without breaking any case", "");
  }
  report.fact("margins", histogram(margins));
  rec.finish(cases.size());
  return report;
}

}  // namespace slater
