#include "fairdiv/io.hpp"

#include "fairdiv/error.hpp"

#include <fstream>
#include <sstream>

namespace fairdiv {

namespace {

std::string next_token(std::istream& in, const char* what) {
  std::string tok;
  if (!(in >> tok)) fail(ErrorKind::parse, std::string("expected ") + what);
  return tok;
}

int next_int(std::istream& in, const char* what) {
  std::string tok = next_token(in, what);
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::parse, std::string("bad ") + what + " '" + tok + "'");
  }
}

}  // namespace

Instance read_instance(std::istream& in) {
  std::string first = next_token(in, "agent count or 'raw'");
  bool raw = first == "raw";
  int n, m;
  if (raw) {
    n = next_int(in, "agent count");
  } else {
    std::istringstream head(first);
    n = next_int(head, "agent count");
  }
  m = next_int(in, "good count");
  if (n < 1) fail(ErrorKind::parse, "agent count must be at least 1");
  if (m < 0) fail(ErrorKind::parse, "good count must be non-negative");

  if (raw) {
    std::vector<std::vector<Rational>> values(n, std::vector<Rational>(m));
    for (int i = 0; i < n; ++i)
      for (int g = 0; g < m; ++g)
        values[i][g] = parse_rational(next_token(in, "value"));
    return normalize(std::move(values));
  }

  std::vector<Rational> ratios(n);
  for (int i = 0; i < n; ++i) ratios[i] = parse_rational(next_token(in, "ratio"));
  std::vector<std::string> rows(n);
  for (int i = 0; i < n; ++i) {
    if (m == 0) {
      rows[i].clear();
      continue;
    }
    rows[i] = next_token(in, "large/small row");
    if (static_cast<int>(rows[i].size()) != m)
      fail(ErrorKind::parse, "agent " + std::to_string(i) + ": row has " +
                                 std::to_string(rows[i].size()) + " goods, expected " +
                                 std::to_string(m));
  }
  return make_instance(std::move(ratios), rows);
}

void write_instance(std::ostream& out, const Instance& inst) {
  if (inst.has_raw_values()) {
    out << "raw " << inst.agent_count << ' ' << inst.good_count << '\n';
    for (const auto& row : inst.raw_values) {
      for (int g = 0; g < inst.good_count; ++g)
        out << (g ? " " : "") << format_rational(row[g]);
      out << '\n';
    }
    return;
  }
  out << inst.agent_count << ' ' << inst.good_count << '\n';
  for (int i = 0; i < inst.agent_count; ++i)
    out << (i ? " " : "") << format_rational(inst.ratios[i]);
  out << '\n';
  for (int i = 0; i < inst.agent_count; ++i) {
    for (int g = 0; g < inst.good_count; ++g)
      out << (inst.is_large(i, g) ? 'L' : 'S');
    out << '\n';
  }
}

Allocation read_allocation(std::istream& in) {
  int m = next_int(in, "good count");
  if (m < 0) fail(ErrorKind::parse, "good count must be non-negative");
  Allocation alloc;
  alloc.owner.resize(m);
  for (int g = 0; g < m; ++g) {
    int o = next_int(in, "owner");
    if (o < kUnassigned) fail(ErrorKind::parse, "bad owner index");
    alloc.owner[g] = o;
  }
  return alloc;
}

void write_allocation(std::ostream& out, const Allocation& alloc) {
  out << alloc.owner.size() << '\n';
  for (size_t g = 0; g < alloc.owner.size(); ++g)
    out << (g ? " " : "") << alloc.owner[g];
  out << '\n';
}

BipartiteGraphFile read_bipartite_graph(std::istream& in) {
  BipartiteGraphFile file;
  file.graph.a_count = next_int(in, "A-side vertex count");
  file.graph.b_count = next_int(in, "B-side vertex count");
  file.k = next_int(in, "k");
  std::string tok;
  while (in >> tok) {
    std::istringstream atok(tok);
    int a = next_int(atok, "A-side endpoint");
    int b = next_int(in, "B-side endpoint");
    file.graph.edges.emplace_back(a, b);
  }
  file.graph.validate();
  return file;
}

std::string po_record(const std::optional<Improvement>& certificate) {
  if (!certificate) return "PO\n";
  std::ostringstream out;
  out << "NOT_PO\n";
  for (const Transfer& t : certificate->transfers)
    out << t.good << ' ' << t.from << ' ' << t.to << '\n';
  return out.str();
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::parse, "cannot write '" + path + "'");
  out << content;
}

namespace {

template <typename Read>
auto from_file(const std::string& path, Read read) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::parse, "cannot open '" + path + "'");
  try {
    return read(in);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse)
      throw Error(ErrorKind::parse, path + ": " + e.what());
    throw;
  }
}

}  // namespace

Instance read_instance_file(const std::string& path) {
  return from_file(path, [](std::istream& in) { return read_instance(in); });
}

Allocation read_allocation_file(const std::string& path) {
  return from_file(path, [](std::istream& in) { return read_allocation(in); });
}

BipartiteGraphFile read_bipartite_graph_file(const std::string& path) {
  return from_file(path, [](std::istream& in) { return read_bipartite_graph(in); });
}

}  // namespace fairdiv
