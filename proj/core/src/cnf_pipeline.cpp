#include "slater/cnf_pipeline.hpp"

#include <cstdlib>
#include <string>

#include "slater/errors.hpp"

namespace slater {

GraphReduction graph_to_maxmodel(const Graph& g) {
  const std::size_t n = g.n;
  if (n == 0) throw InvalidInput("graph must have at least one vertex");
  const auto x = [n](std::size_t i, std::size_t j) {
    return static_cast<Literal>((i - 1) * (n + 1) + j);
  };
  const auto y = [n](std::size_t i) { return static_cast<Literal>(n * (n + 1) + i); };

  GraphReduction out;
  auto& cnf = out.instance.cnf;
  cnf.num_vars = n * (n + 1) + n;
  out.variable_names.resize(cnf.num_vars);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n + 1; ++j) {
      out.variable_names[x(i, j) - 1] = "x_" + std::to_string(i) + "^" + std::to_string(j);
    }
    out.variable_names[y(i) - 1] = "y_" + std::to_string(i);
  }

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n + 1; ++j) {
      for (std::size_t k = 1; k <= n + 1; ++k) {
        if (j != k) cnf.clauses.push_back({-x(i, j), x(i, k)});
      }
    }
  }
  for (const auto& [u, v] : g.edges) {
    for (std::size_t j = 1; j <= n + 1; ++j) {
      for (std::size_t k = 1; k <= n + 1; ++k) {
        cnf.clauses.push_back({-x(u + 1, j), -x(v + 1, k)});
      }
    }
  }
  cnf.clauses.push_back({-y(1), x(1, 1)});
  cnf.clauses.push_back({y(1), -x(1, 1)});
  for (std::size_t i = 2; i <= n; ++i) {
    cnf.clauses.push_back({-y(i), y(i - 1), x(i, 1)});
    cnf.clauses.push_back({-y(i), -y(i - 1), -x(i, 1)});
    cnf.clauses.push_back({y(i), -y(i - 1), x(i, 1)});
    cnf.clauses.push_back({y(i), y(i - 1), -x(i, 1)});
  }
  out.instance.dvar = static_cast<std::size_t>(y(n));
  return out;
}

RestrictedReduction maxmodel_to_restricted(const MaxModelInstance& inst) {
  inst.validate();
  const std::size_t n = inst.cnf.num_vars;
  const std::size_t m = inst.cnf.clauses.size();
  if (m == 0) throw InvalidInput("restriction needs at least one clause");
  for (std::size_t c = 0; c < m; ++c) {
    const auto& clause = inst.cnf.clauses[c];
    for (std::size_t a = 0; a < clause.size(); ++a) {
      for (std::size_t b = a + 1; b < clause.size(); ++b) {
        if (std::abs(clause[a]) == std::abs(clause[b])) {
          throw InvalidInput("clause " + std::to_string(c + 1) + " repeats variable " +
                             std::to_string(std::abs(clause[a])));
        }
      }
    }
  }
  const auto yv = [m](std::size_t i, std::size_t j) {
    return static_cast<Literal>((i - 1) * m + j);
  };

  RestrictedReduction out;
  out.copies = m;
  auto& cnf = out.pcnf.instance.cnf;
  cnf.num_vars = n * m;
  out.variable_names.resize(cnf.num_vars);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      out.variable_names[yv(i, j) - 1] = "y_" + std::to_string(i) + "^" + std::to_string(j);
    }
  }
  if (m > 1) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j < m; ++j) {
        cnf.clauses.push_back({-yv(i, j), yv(i, j + 1)});
        out.pcnf.sides.push_back(Side::R);
      }
      cnf.clauses.push_back({-yv(i, m), yv(i, 1)});
      out.pcnf.sides.push_back(Side::R);
    }
  }
  for (std::size_t j = 1; j <= m; ++j) {
    Clause renamed;
    for (const auto lit : inst.cnf.clauses[j - 1]) {
      const auto v = yv(static_cast<std::size_t>(std::abs(lit)), j);
      renamed.push_back(lit > 0 ? v : -v);
    }
    cnf.clauses.push_back(std::move(renamed));
    out.pcnf.sides.push_back(Side::L);
    out.origin.push_back(j - 1);
  }
  out.pcnf.instance.dvar = static_cast<std::size_t>(yv(inst.dvar, 1));
  return out;
}

}  // namespace slater
