#pragma once

// Property-check harness behind `slater verify`. Each check returns ordered
// KEY: value facts and writes counterexample files on failure.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slater/fas_solver.hpp"

namespace slater {

struct VerifyOptions {
  std::size_t trials = 0;  // 0 selects the check's default
  std::uint64_t seed = 1;
  std::size_t max_n = 0;   // 0 selects the check's default
  std::optional<std::filesystem::path> instance;
  std::filesystem::path counterexample_dir = ".";
  SolverCaps caps;
};

struct VerifyReport {
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::filesystem::path> counterexamples;

  void fact(std::string key, std::string value) {
    facts.emplace_back(std::move(key), std::move(value));
  }
};

VerifyReport verify_solver(const VerifyOptions& opts);
VerifyReport verify_lemma1(const VerifyOptions& opts);
VerifyReport verify_lemma2(const VerifyOptions& opts);
VerifyReport verify_lemma4(const VerifyOptions& opts);
VerifyReport verify_theorem1(const VerifyOptions& opts);
VerifyReport verify_theorem2(const VerifyOptions& opts);

}  // namespace slater
