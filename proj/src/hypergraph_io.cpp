#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "dhg/error.hpp"
#include "dhg/hypergraph.hpp"

namespace dhg {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> parse_labels(std::string_view field, std::size_t line, const char* role) {
  if (field.empty()) throw ParseError(line, std::string("empty ") + role + " set");
  std::vector<std::string_view> labels;
  std::unordered_set<std::string_view> seen;
  for (std::string_view token : split(field, ',')) {
    if (token.empty()) throw ParseError(line, std::string("empty label in ") + role + " set");
    if (seen.insert(token).second) labels.push_back(token);
  }
  return labels;
}

Timestamp parse_timestamp(std::string_view field, std::size_t line) {
  Timestamp value = 0;
  const char* first = field.data();
  const char* last = first + field.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line, "timestamp is not a base-10 integer: '" + std::string(field) + "'");
  }
  return value;
}

bool sets_intersect(const std::vector<std::string_view>& a, const std::vector<std::string_view>& b) {
  const std::unordered_set<std::string_view> lookup(a.begin(), a.end());
  return std::any_of(b.begin(), b.end(), [&](std::string_view s) { return lookup.count(s) > 0; });
}

}  // namespace

DirectedHypergraph parse_hypergraph(std::istream& in) {
  NodeTable nodes;
  std::vector<Hyperarc> arcs;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const auto fields = split(line, '\t');
    if (fields.size() < 2) throw ParseError(line_no, "expected tail<TAB>head[<TAB>timestamp]");
    if (fields.size() > 3) throw ParseError(line_no, "too many fields");

    auto tail = parse_labels(fields[0], line_no, "tail");
    auto head = parse_labels(fields[1], line_no, "head");
    std::optional<Timestamp> ts;
    if (fields.size() == 3) ts = parse_timestamp(fields[2], line_no);

    // Self-loops are dropped before interning so that every node has degree >= 1.
    if (sets_intersect(tail, head)) continue;

    Hyperarc arc;
    arc.timestamp = ts;
    for (const auto& l : tail) arc.tail.push_back(nodes.intern(l));
    for (const auto& l : head) arc.head.push_back(nodes.intern(l));
    arcs.push_back(std::move(arc));
  }
  return DirectedHypergraph(std::move(nodes), std::move(arcs), DuplicatePolicy::collapse);
}

DirectedHypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

DirectedHypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_hypergraph(in);
}

namespace {

void write_labels(std::ostream& out, const DirectedHypergraph& g, const std::vector<NodeId>& set) {
  std::vector<std::string_view> labels;
  labels.reserve(set.size());
  for (NodeId v : set) labels.emplace_back(g.label(v));
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out << ',';
    out << labels[i];
  }
}

}  // namespace

void write_hypergraph(std::ostream& out, const DirectedHypergraph& g) {
  for (const Hyperarc& a : g.arcs()) {
    write_labels(out, g, a.tail);
    out << '\t';
    write_labels(out, g, a.head);
    if (a.timestamp) out << '\t' << *a.timestamp;
    out << '\n';
  }
}

std::string to_text(const DirectedHypergraph& g) {
  std::ostringstream out;
  write_hypergraph(out, g);
  return out.str();
}

}  // namespace dhg
