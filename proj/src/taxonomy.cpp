#include "dhg/taxonomy.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>

#include "dhg/error.hpp"

namespace dhg {

RegionPattern RegionPattern::parse(std::string_view text) {
  if (text.size() != 8) throw std::invalid_argument("region pattern needs 8 characters");
  std::array<bool, 8> regions{};
  for (int k = 0; k < 8; ++k) {
    if (text[k] != '0' && text[k] != '1') throw std::invalid_argument("region pattern must be 0/1");
    regions[k] = text[k] == '1';
  }
  return from_regions(regions);
}

std::string RegionPattern::to_string() const {
  std::string s(8, '0');
  for (int k = 1; k <= 8; ++k) s[k - 1] = region(k) ? '1' : '0';
  return s;
}

namespace {

// Pattern from the point of view of `small`, touching only its members.
PairOverlap scan_smaller(const Hyperarc& small, const Hyperarc& large) {
  std::uint32_t hh = 0, ht = 0, th = 0, tt = 0;
  for (NodeId v : small.head) {
    if (large.in_head(v)) ++hh;
    else if (large.in_tail(v)) ++ht;
  }
  for (NodeId v : small.tail) {
    if (large.in_head(v)) ++th;
    else if (large.in_tail(v)) ++tt;
  }
  const std::size_t h = small.head.size(), t = small.tail.size();
  const std::size_t h2 = large.head.size(), t2 = large.tail.size();
  PairOverlap out;
  out.pattern = RegionPattern::from_regions({
      h - hh - ht > 0,   // H \ H' \ T'
      hh > 0,            // H ∩ H'
      ht > 0,            // H ∩ T'
      h2 - hh - th > 0,  // H' \ H \ T
      t2 - ht - tt > 0,  // T' \ H \ T
      th > 0,            // H' ∩ T
      tt > 0,            // T ∩ T'
      t - th - tt > 0,   // T \ H' \ T'
  });
  out.shared = hh + ht + th + tt;
  return out;
}

}  // namespace

PairOverlap overlap(const Hyperarc& e, const Hyperarc& other) {
  if (other.size() < e.size()) {
    PairOverlap o = scan_smaller(other, e);
    o.pattern = o.pattern.swapped();
    return o;
  }
  return scan_smaller(e, other);
}

RegionPattern region_pattern(const Hyperarc& e, const Hyperarc& other) {
  const PairOverlap o = overlap(e, other);
  if (o.shared == 0) throw NotIncidentError("hyperarcs are not incident");
  return o.pattern;
}

namespace {

bool in_taxonomy(RegionPattern p) { return p.sets_non_empty() && p.incident() && !p.duplicate(); }

}  // namespace

TaxonomyCensus ClassTable::census() {
  TaxonomyCensus c;
  std::array<bool, 256> canonical_seen{};
  for (int bits = 0; bits < 256; ++bits) {
    const RegionPattern p(static_cast<std::uint8_t>(bits));
    if (!in_taxonomy(p)) continue;
    ++c.valid_patterns;
    if (p.swapped() == p) ++c.swap_fixed;
    canonical_seen[canonicalize(p).bits()] = true;
  }
  c.classes = static_cast<int>(std::count(canonical_seen.begin(), canonical_seen.end(), true));
  return c;
}

ClassTable::ClassTable() {
  // Canonical patterns in ascending packed order get indices 1, 2, ...
  std::array<std::uint8_t, 256> canonical_index{};
  int next = 0;
  for (int bits = 0; bits < 256; ++bits) {
    const RegionPattern p(static_cast<std::uint8_t>(bits));
    if (!in_taxonomy(p) || canonicalize(p) != p) continue;
    if (next == static_cast<int>(kNumClasses)) throw std::logic_error("taxonomy has more than 91 classes");
    class_to_canonical_[next] = p;
    canonical_index[bits] = static_cast<std::uint8_t>(++next);
  }
  if (next != static_cast<int>(kNumClasses)) {
    throw std::logic_error("taxonomy enumeration produced " + std::to_string(next) + " classes");
  }
  for (int bits = 0; bits < 256; ++bits) {
    const RegionPattern p(static_cast<std::uint8_t>(bits));
    if (in_taxonomy(p)) pattern_to_class_[bits] = canonical_index[canonicalize(p).bits()];
  }
}

const ClassTable& ClassTable::standard() {
  static const ClassTable table;
  return table;
}

ClassId classify_pair(const DirectedHypergraph& g, ArcId i, ArcId j, const ClassTable& table) {
  if (i == j) throw std::invalid_argument("a hyperarc cannot pair with itself");
  const RegionPattern p = region_pattern(g.arc(i), g.arc(j));
  const auto c = table.lookup(p);
  if (!c) throw std::invalid_argument("duplicate hyperarcs belong to no class");
  return *c;
}

ExternalIndexMap ExternalIndexMap::parse(std::istream& in, const ClassTable& table) {
  ExternalIndexMap map;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(line_no, "expected pattern<TAB>index");
    RegionPattern p;
    try {
      p = RegionPattern::parse(std::string_view(line).substr(0, tab));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    const auto c = table.lookup(p);
    if (!c) throw ParseError(line_no, "pattern " + p.to_string() + " is not a class");
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(line.substr(tab + 1), &used);
      if (used != line.size() - tab - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ParseError(line_no, "index is not an integer");
    }
    map.index_[c->slot()] = index;
  }
  return map;
}

ExternalIndexMap ExternalIndexMap::read_file(const std::string& path, const ClassTable& table) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse(in, table);
}

}  // namespace dhg
