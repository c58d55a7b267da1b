#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace slater::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

struct SlaterArgs {
  std::string tournament;
  std::optional<std::uint32_t> vertex;
  std::optional<std::string> modules;
  std::string method = "auto";
};

struct ReduceArgs {
  std::string stage;
  std::string input;
  std::optional<std::string> output;
  std::optional<std::string> layout;
  std::optional<std::string> modules;
  std::optional<std::string> s1;
  std::optional<std::string> s2;
  bool minimize_params = false;
  bool unchecked = false;
};

struct VerifyArgs {
  std::string check;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  std::size_t max_n = 0;
  std::optional<std::string> instance;
  std::string counterexamples = ".";
};

int run_slater(const SlaterArgs& args, std::ostream& out);
int run_reduce(const ReduceArgs& args, std::ostream& out);
int run_verify(const VerifyArgs& args, std::ostream& out);

}  // namespace slater::cli
