#include "slater/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "slater/errors.hpp"

namespace slater {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

// Reads one line token by token; columns are 1-based.
class Cursor {
 public:
  Cursor(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& msg) const { throw FormatError(line_no_, pos_ + 1, msg); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& msg) const {
    throw FormatError(line_no_, col, msg);
  }

  std::size_t column() const noexcept { return pos_ + 1; }
  bool at_end() const noexcept { return pos_ == line_.size(); }
  std::string_view rest() const { return line_.substr(pos_); }

  void keyword(std::string_view word) {
    if (line_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  void space() {
    if (at_end() || line_[pos_] != ' ') fail("expected a single space");
    ++pos_;
  }

  void end() {
    if (!at_end()) fail("unexpected trailing characters");
  }

  std::string_view word() {
    const auto start = pos_;
    while (pos_ < line_.size() && line_[pos_] != ' ') ++pos_;
    if (pos_ == start) fail("expected a token");
    return line_.substr(start, pos_ - start);
  }

  // Decimal without sign or leading zeros.
  std::string_view digits() {
    const auto start = pos_;
    while (pos_ < line_.size() && line_[pos_] >= '0' && line_[pos_] <= '9') ++pos_;
    if (pos_ == start) fail("expected a nonnegative integer");
    if (line_[start] == '0' && pos_ - start > 1) fail_at(start + 1, "leading zero");
    return line_.substr(start, pos_ - start);
  }

  std::uint64_t number(std::uint64_t max = std::numeric_limits<std::uint32_t>::max()) {
    const auto start = pos_;
    const auto d = digits();
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc{} || v > max) fail_at(start + 1, "number out of range");
    return v;
  }

  std::int64_t signed_number() {
    bool negative = false;
    if (!at_end() && line_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    const auto v = static_cast<std::int64_t>(number());
    return negative ? -v : v;
  }

  char peek() const { return at_end() ? '\0' : line_[pos_]; }
  void advance() { ++pos_; }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

class LineReader {
 public:
  explicit LineReader(std::string_view text) : lines_(split_lines(text)) {}

  bool done() const noexcept { return next_ == lines_.size(); }
  std::size_t line_no() const noexcept { return next_; }  // of the last taken line

  Cursor take(const std::string& what) {
    if (done()) throw FormatError(lines_.size() + 1, 1, "missing " + what);
    const auto line = lines_[next_++];
    return Cursor(line, next_);
  }

  void finish() const {
    if (!done()) throw FormatError(next_ + 1, 1, "unexpected extra line");
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
};

std::string join(const std::vector<Vertex>& ids) {
  std::string out;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(ids[k]);
  }
  return out;
}

// Ids separated by single spaces, each in [0, bound), no repeats across
// `seen`.
std::vector<Vertex> id_list(Cursor& c, std::size_t bound, std::vector<bool>& seen) {
  std::vector<Vertex> ids;
  while (true) {
    const auto col = c.column();
    const auto v = c.number();
    if (v >= bound) c.fail_at(col, "vertex " + std::to_string(v) + " out of range");
    if (seen[v]) c.fail_at(col, "vertex " + std::to_string(v) + " repeated");
    seen[v] = true;
    ids.push_back(static_cast<Vertex>(v));
    if (c.at_end()) break;
    c.space();
  }
  return ids;
}

BigInt big_number(Cursor& c) {
  const auto col = c.column();
  const auto d = c.digits();
  BigInt v{std::string(d)};
  if (v == 0) c.fail_at(col, "expected a positive integer");
  return v;
}

}  // namespace

Tournament parse_tournament(std::string_view text) {
  LineReader in(text);
  auto head = in.take("header");
  head.keyword("tournament");
  head.space();
  const auto n = static_cast<std::size_t>(head.number(1U << 20));
  head.end();
  std::vector<std::string> rows;
  rows.reserve(n);
  for (std::size_t u = 0; u < n; ++u) {
    auto row = in.take("row " + std::to_string(u));
    std::string cells(n, '-');
    for (std::size_t v = 0; v < n; ++v) {
      const char ch = row.peek();
      if (u == v) {
        if (ch != '-') row.fail("expected '-' on the diagonal");
      } else if (ch != '0' && ch != '1') {
        row.fail("expected '0' or '1'");
      }
      cells[v] = ch;
      row.advance();
    }
    row.end();
    rows.push_back(std::move(cells));
  }
  in.finish();
  auto t = Tournament::transitive(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rows[u][v] == rows[v][u]) {
        throw FormatError(v + 2, u + 1,
                          "pair (" + std::to_string(u) + "," + std::to_string(v) +
                              ") must have exactly one arc");
      }
      if (rows[u][v] == '0') t.orient(static_cast<Vertex>(v), static_cast<Vertex>(u));
    }
  }
  return t;
}

std::string to_text(const Tournament& t) {
  std::string out = "tournament " + std::to_string(t.size()) + "\n";
  for (Vertex u = 0; u < t.size(); ++u) {
    for (Vertex v = 0; v < t.size(); ++v) out += u == v ? '-' : (t.has_arc(u, v) ? '1' : '0');
    out += '\n';
  }
  return out;
}

Profile parse_profile(std::string_view text) {
  LineReader in(text);
  auto head = in.take("header");
  head.keyword("profile");
  head.space();
  const auto n = static_cast<std::size_t>(head.number());
  head.space();
  const auto k = static_cast<std::size_t>(head.number());
  head.end();
  if (k == 0) head.fail_at(1, "profile needs at least one voter");
  Profile p;
  p.candidates = n;
  for (std::size_t i = 0; i < k; ++i) {
    auto line = in.take("voter " + std::to_string(i + 1));
    std::vector<bool> seen(n, false);
    std::vector<Vertex> ids;
    if (n > 0) ids = id_list(line, n, seen);
    line.end();
    if (ids.size() != n) {
      line.fail("voter lists " + std::to_string(ids.size()) + " of " + std::to_string(n) +
                " candidates");
    }
    p.voters.emplace_back(std::move(ids));
  }
  in.finish();
  return p;
}

std::string to_text(const Profile& p) {
  std::string out =
      "profile " + std::to_string(p.candidates) + " " + std::to_string(p.voters.size()) + "\n";
  for (const auto& v : p.voters) out += join(v.sequence()) + "\n";
  return out;
}

ModulePartition parse_modules(std::string_view text) {
  LineReader in(text);
  auto head = in.take("header");
  head.keyword("modules");
  head.space();
  const auto k = static_cast<std::size_t>(head.number());
  head.end();
  std::vector<std::vector<Vertex>> classes;
  std::size_t total = 0;
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // (line, column) per id
  std::vector<Vertex> all;
  for (std::size_t c = 0; c < k; ++c) {
    auto line = in.take("class " + std::to_string(c + 1));
    std::vector<Vertex> ids;
    while (true) {
      cells.emplace_back(in.line_no(), line.column());
      ids.push_back(static_cast<Vertex>(line.number()));
      if (line.at_end()) break;
      line.space();
    }
    total += ids.size();
    all.insert(all.end(), ids.begin(), ids.end());
    classes.push_back(std::move(ids));
  }
  in.finish();
  std::vector<bool> seen(total, false);
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    const auto [line, col] = cells[idx];
    if (all[idx] >= total) {
      throw FormatError(line, col,
                        "vertex " + std::to_string(all[idx]) + " outside 0.." +
                            std::to_string(total) + "-1");
    }
    if (seen[all[idx]]) throw FormatError(line, col, "vertex " + std::to_string(all[idx]) + " repeated");
    seen[all[idx]] = true;
  }
  return ModulePartition(total, std::move(classes));
}

std::string to_text(const ModulePartition& mp) {
  std::string out = "modules " + std::to_string(mp.class_count()) + "\n";
  for (const auto& c : mp.classes()) out += join(c) + "\n";
  return out;
}

Graph parse_graph(std::string_view text) {
  LineReader in(text);
  auto head = in.take("header");
  head.keyword("graph");
  head.space();
  const auto n = static_cast<std::size_t>(head.number());
  head.space();
  const auto m = static_cast<std::size_t>(head.number());
  head.end();
  Graph g(n);
  for (std::size_t e = 0; e < m; ++e) {
    auto line = in.take("edge " + std::to_string(e + 1));
    const auto u = static_cast<Vertex>(line.number());
    line.space();
    const auto v = static_cast<Vertex>(line.number());
    line.end();
    try {
      g.add_edge(u, v);
    } catch (const InvalidInput& err) {
      line.fail_at(1, err.what());
    }
  }
  in.finish();
  return g;
}

std::string to_text(const Graph& g) {
  std::string out = "graph " + std::to_string(g.n) + " " + std::to_string(g.edges.size()) + "\n";
  for (const auto& [u, v] : g.edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

DimacsFile parse_dimacs(std::string_view text) {
  LineReader in(text);
  DimacsFile f;
  std::optional<std::pair<std::size_t, std::size_t>> dvar_at;  // line, column
  std::optional<std::pair<std::size_t, std::string>> lr;        // line, text
  std::size_t declared_clauses = 0;
  while (true) {
    auto line = in.take("'p cnf' line");
    if (line.peek() == 'p') {
      line.keyword("p cnf");
      line.space();
      f.cnf.num_vars = static_cast<std::size_t>(line.number(1U << 30));
      line.space();
      declared_clauses = static_cast<std::size_t>(line.number());
      line.end();
      break;
    }
    line.keyword("c");
    if (line.at_end()) continue;
    line.space();
    const auto rest = line.rest();
    if (rest.starts_with("dvar")) {
      line.keyword("dvar");
      if (f.dvar) line.fail_at(1, "duplicate dvar comment");
      line.space();
      dvar_at.emplace(in.line_no(), line.column());
      f.dvar = static_cast<std::size_t>(line.number());
      line.end();
    } else if (rest.starts_with("lr")) {
      line.keyword("lr");
      if (lr) line.fail_at(1, "duplicate lr comment");
      std::string sides;
      if (!line.at_end()) {
        line.space();
        sides = std::string(line.rest());
      }
      lr.emplace(in.line_no(), std::move(sides));
    }
  }
  const auto header_line = in.line_no();
  if (f.dvar && (*f.dvar < 1 || *f.dvar > f.cnf.num_vars)) {
    throw FormatError(dvar_at->first, dvar_at->second,
                      "dvar " + std::to_string(*f.dvar) + " outside 1.." +
                          std::to_string(f.cnf.num_vars));
  }
  for (std::size_t c = 0; c < declared_clauses; ++c) {
    auto line = in.take("clause " + std::to_string(c + 1));
    Clause clause;
    while (true) {
      const auto col = line.column();
      const auto lit = line.signed_number();
      if (lit == 0) {
        if (line.column() - col != 1) line.fail_at(col, "'-0' is not a literal");
        break;
      }
      if (static_cast<std::size_t>(lit < 0 ? -lit : lit) > f.cnf.num_vars) {
        line.fail_at(col, "literal " + std::to_string(lit) + " outside the declared variables");
      }
      clause.push_back(static_cast<Literal>(lit));
      line.space();
    }
    line.end();
    if (clause.empty()) line.fail_at(1, "empty clause");
    f.cnf.clauses.push_back(std::move(clause));
  }
  in.finish();
  if (lr) {
    const auto& [lr_line, sides] = *lr;
    if (sides.size() != declared_clauses) {
      throw FormatError(lr_line, 6,
                        "lr lists " + std::to_string(sides.size()) + " sides for " +
                            std::to_string(declared_clauses) + " clauses (header on line " +
                            std::to_string(header_line) + ")");
    }
    std::vector<Side> parsed;
    for (std::size_t k = 0; k < sides.size(); ++k) {
      if (sides[k] != 'L' && sides[k] != 'R') throw FormatError(lr_line, 6 + k, "expected 'L' or 'R'");
      parsed.push_back(static_cast<Side>(sides[k]));
    }
    f.sides = std::move(parsed);
  }
  return f;
}

std::string to_text(const DimacsFile& f) {
  std::string out;
  if (f.dvar) out += "c dvar " + std::to_string(*f.dvar) + "\n";
  if (f.sides) {
    out += "c lr";
    if (!f.sides->empty()) out += ' ';
    for (const auto s : *f.sides) out += static_cast<char>(s);
    out += '\n';
  }
  out += "p cnf " + std::to_string(f.cnf.num_vars) + " " + std::to_string(f.cnf.clauses.size()) +
         "\n";
  for (const auto& clause : f.cnf.clauses) {
    for (const auto lit : clause) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

DimacsFile to_dimacs(const MaxModelInstance& inst) { return {inst.cnf, inst.dvar, std::nullopt}; }

DimacsFile to_dimacs(const PartitionedCnf& pcnf) {
  return {pcnf.instance.cnf, pcnf.instance.dvar, pcnf.sides};
}

MaxModelInstance to_instance(const DimacsFile& f) {
  if (!f.dvar) throw FormatError(1, 1, "missing 'c dvar' comment");
  return {f.cnf, *f.dvar};
}

PartitionedCnf to_partitioned(const DimacsFile& f) {
  if (!f.sides) throw FormatError(1, 1, "missing 'c lr' comment");
  return {to_instance(f), *f.sides};
}

LayoutMetadata layout_metadata(const GadgetLayout& layout) {
  LayoutMetadata meta;
  meta.params = layout.params();
  for (const auto& mod : layout.modules()) {
    meta.modules.push_back({mod.name(), mod.range.begin, mod.range.end});
  }
  meta.designated = layout.designated();
  return meta;
}

LayoutMetadata parse_layout(std::string_view text) {
  LineReader in(text);
  LayoutMetadata meta;
  auto head = in.take("params line");
  head.keyword("params");
  head.space();
  meta.params.n = static_cast<std::size_t>(head.number());
  head.space();
  meta.params.m = static_cast<std::size_t>(head.number());
  head.space();
  meta.params.s1 = big_number(head);
  head.space();
  meta.params.s2 = big_number(head);
  head.end();
  std::set<std::string> names;
  Vertex expected_start = 0;
  while (true) {
    auto line = in.take("designated line");
    if (line.peek() == 'd') {
      line.keyword("designated");
      line.space();
      const auto col = line.column();
      meta.designated = static_cast<Vertex>(line.number());
      line.end();
      if (meta.designated >= expected_start) line.fail_at(col, "designated vertex outside the layout");
      break;
    }
    line.keyword("module");
    line.space();
    const auto name_col = line.column();
    const auto name = std::string(line.word());
    const bool well_formed = name.size() >= 3 && std::string_view("ABCDEFT").find(name[0]) !=
                                                     std::string_view::npos &&
                             name[1] == '_' && name[2] != '0' &&
                             name.find_first_not_of("0123456789", 2) == std::string::npos;
    if (!well_formed) line.fail_at(name_col, "bad module name '" + name + "'");
    if (!names.insert(name).second) line.fail_at(name_col, "duplicate module '" + name + "'");
    line.space();
    const auto start_col = line.column();
    const auto start = static_cast<Vertex>(line.number());
    line.space();
    const auto end_col = line.column();
    const auto end = static_cast<Vertex>(line.number());
    line.end();
    if (start != expected_start) line.fail_at(start_col, "module ranges must be contiguous");
    if (end <= start) line.fail_at(end_col, "empty module range");
    expected_start = end;
    meta.modules.push_back({name, start, end});
  }
  in.finish();
  return meta;
}

std::string to_text(const LayoutMetadata& meta) {
  std::ostringstream out;
  out << "params " << meta.params.n << ' ' << meta.params.m << ' ' << meta.params.s1 << ' '
      << meta.params.s2 << '\n';
  for (const auto& e : meta.modules) {
    out << "module " << e.name << ' ' << e.start << ' ' << e.end << '\n';
  }
  out << "designated " << meta.designated << '\n';
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace slater
