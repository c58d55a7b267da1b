#pragma once

// Plain-text file formats. Every parser is strict: any deviation raises
// FormatError with a 1-based line and column.
//
//   tournament <n>         n rows of n chars over {0,1,-}; row u col v is 1
//                          iff arc (u, v); '-' on the diagonal
//   profile <n> <k>        k lines of candidate ids, ascending preference
//   modules <k>            k lines of vertex ids
//   graph <n> <m>          m lines "u v"
//   DIMACS cnf             with "c dvar <v>" and "c lr <L/R per clause>"
//   layout metadata        "params n m s1 s2", "module <name> <start> <end>",
//                          "designated <id>"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slater/formulas.hpp"
#include "slater/gadget.hpp"
#include "slater/tournament.hpp"

namespace slater {

Tournament parse_tournament(std::string_view text);
std::string to_text(const Tournament& t);

Profile parse_profile(std::string_view text);
std::string to_text(const Profile& p);

ModulePartition parse_modules(std::string_view text);
std::string to_text(const ModulePartition& mp);

Graph parse_graph(std::string_view text);
std::string to_text(const Graph& g);

struct DimacsFile {
  Cnf cnf;
  std::optional<std::size_t> dvar;
  std::optional<std::vector<Side>> sides;

  friend bool operator==(const DimacsFile&, const DimacsFile&) = default;
};

DimacsFile parse_dimacs(std::string_view text);
std::string to_text(const DimacsFile& f);

DimacsFile to_dimacs(const MaxModelInstance& inst);
DimacsFile to_dimacs(const PartitionedCnf& pcnf);
// Require the dvar (and, for the partitioned form, lr) comment; throw
// FormatError when absent.
MaxModelInstance to_instance(const DimacsFile& f);
PartitionedCnf to_partitioned(const DimacsFile& f);

struct LayoutMetadata {
  struct Entry {
    std::string name;
    Vertex start = 0;
    Vertex end = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  ReductionParams params;
  std::vector<Entry> modules;
  Vertex designated = 0;

  friend bool operator==(const LayoutMetadata&, const LayoutMetadata&) = default;
};

LayoutMetadata layout_metadata(const GadgetLayout& layout);
LayoutMetadata parse_layout(std::string_view text);
std::string to_text(const LayoutMetadata& meta);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace slater
