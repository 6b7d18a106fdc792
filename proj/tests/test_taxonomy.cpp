#include <doctest.h>

#include <set>
#include <sstream>

#include "dhg/error.hpp"
#include "dhg/taxonomy.hpp"
#include "oracles.hpp"

using namespace dhg;

namespace {

RegionPattern pat(const char* s) { return RegionPattern::parse(s); }

Hyperarc arc_of(NodeTable& nodes, std::initializer_list<const char*> tail, std::initializer_list<const char*> head) {
  Hyperarc a;
  for (const char* l : tail) a.tail.push_back(nodes.intern(l));
  for (const char* l : head) a.head.push_back(nodes.intern(l));
  normalize(a);
  return a;
}

}  // namespace

TEST_CASE("region pattern of the chemical-reaction pair") {
  // FeO + H2 -> Fe + H2O and C + H2O -> CO + H2
  NodeTable nodes;
  const Hyperarc e = arc_of(nodes, {"FeO", "H2"}, {"Fe", "H2O"});
  const Hyperarc f = arc_of(nodes, {"C", "H2O"}, {"CO", "H2"});
  CHECK(region_pattern(e, f) == pat("10111101"));
  CHECK(region_pattern(f, e) == pat("10111101").swapped());
}

TEST_CASE("region pattern of two arcs sharing only a tail node") {
  NodeTable nodes;
  const Hyperarc e = arc_of(nodes, {"a"}, {"b"});
  const Hyperarc f = arc_of(nodes, {"a"}, {"c"});
  CHECK(region_pattern(e, f) == pat("10010010"));
}

TEST_CASE("region pattern rejects non-incident arcs") {
  NodeTable nodes;
  const Hyperarc e = arc_of(nodes, {"a"}, {"b"});
  const Hyperarc f = arc_of(nodes, {"c"}, {"d"});
  CHECK_THROWS_AS(region_pattern(e, f), NotIncidentError);
  CHECK(overlap(e, f).shared == 0);
}

TEST_CASE("swap permutes regions (1 4)(3 6)(5 8)") {
  CHECK(pat("00110001").swapped() == pat("10001100"));
  for (int b = 0; b < 256; ++b) {
    const RegionPattern p(static_cast<std::uint8_t>(b));
    CHECK(p.swapped().swapped() == p);
    CHECK(p.swapped().region(2) == p.region(2));
    CHECK(p.swapped().region(7) == p.region(7));
    CHECK(p.swapped().region(1) == p.region(4));
    CHECK(p.swapped().region(3) == p.region(6));
    CHECK(p.swapped().region(5) == p.region(8));
  }
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(pat("10010010")) == pat("10010010"));
  // 00110001 = 49 < 10001100 = 140
  CHECK(canonicalize(pat("00110001")) == pat("00110001"));
  CHECK(canonicalize(pat("10001100")) == pat("00110001"));
  for (int b = 0; b < 256; ++b) {
    const RegionPattern p(static_cast<std::uint8_t>(b));
    CHECK(canonicalize(canonicalize(p)) == canonicalize(p));
    CHECK(canonicalize(p) == canonicalize(p.swapped()));
  }
}

TEST_CASE("pattern text form") {
  CHECK(pat("10111101").to_string() == "10111101");
  CHECK(pat("10111101").bits() == 0b10111101);
  CHECK(pat("10111101").region(1));
  CHECK_FALSE(pat("10111101").region(2));
  CHECK_THROWS_AS(pat("1011110"), std::invalid_argument);
  CHECK_THROWS_AS(pat("1011110x"), std::invalid_argument);
}

TEST_CASE("class table enumeration") {
  const auto census = ClassTable::census();
  CHECK(census.valid_patterns == 159);
  CHECK(census.swap_fixed == 23);
  CHECK(census.classes == 91);
  CHECK((census.valid_patterns + census.swap_fixed) / 2 == 91);

  const ClassTable& table = ClassTable::standard();
  CHECK(table.size() == 91);
  std::set<std::uint8_t> canonicals;
  for (int i = 1; i <= 91; ++i) {
    const RegionPattern p = table.canonical(ClassId(i));
    CHECK(canonicalize(p) == p);
    CHECK(p.sets_non_empty());
    CHECK(p.incident());
    CHECK_FALSE(p.duplicate());
    CHECK(table.lookup(p) == ClassId(i));
    canonicals.insert(p.bits());
    if (i > 1) CHECK(table.canonical(ClassId(i - 1)) < p);
  }
  CHECK(canonicals.size() == 91);

  for (int b = 0; b < 256; ++b) {
    const RegionPattern p(static_cast<std::uint8_t>(b));
    CHECK(table.lookup(p) == table.lookup(p.swapped()));
  }
  CHECK_FALSE(table.lookup(pat("01000010")).has_value());  // duplicate pair
  CHECK_FALSE(table.lookup(pat("10011001")).has_value());  // non-incident
  CHECK_FALSE(table.lookup(pat("00000000")).has_value());
}

TEST_CASE("region pattern agrees with the materialized-set oracle") {
  Rng rng(2024);
  std::size_t pairs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = oracle::random_graph(rng, 3 + rng.below(10), 2 + rng.below(6), 4);
    for (ArcId i = 0; i < g.arc_count(); ++i) {
      for (ArcId j = 0; j < g.arc_count(); ++j) {
        if (i == j || !oracle::incident(g.arc(i), g.arc(j))) continue;
        ++pairs;
        const PairOverlap o = overlap(g.arc(i), g.arc(j));
        CHECK(o.pattern == RegionPattern::from_regions(oracle::regions(g.arc(i), g.arc(j))));
        CHECK(o.shared == oracle::shared(g.arc(i), g.arc(j)));
      }
    }
  }
  CHECK(pairs > 1000);
}

TEST_CASE("classify_pair") {
  const ClassTable& table = ClassTable::standard();
  const auto g = parse_hypergraph("FeO,H2\tFe,H2O\nC,H2O\tCO,H2\na\tb\nb\tc\nx\ty\n");
  CHECK(table.canonical(classify_pair(g, 0, 1, table)) == canonicalize(pat("10111101")));
  CHECK(table.canonical(classify_pair(g, 2, 3, table)) == canonicalize(pat("00110001")));
  CHECK(classify_pair(g, 2, 3, table) == classify_pair(g, 3, 2, table));
  CHECK_THROWS_AS(classify_pair(g, 2, 2, table), std::invalid_argument);
  CHECK_THROWS_AS(classify_pair(g, 2, 4, table), NotIncidentError);

  NodeTable nodes;
  nodes.intern("a");
  nodes.intern("b");
  const DirectedHypergraph dup(nodes, {Hyperarc{{0}, {1}, {}}, Hyperarc{{0}, {1}, {}}}, DuplicatePolicy::keep);
  CHECK_THROWS_AS(classify_pair(dup, 0, 1, table), std::invalid_argument);
}

TEST_CASE("classify_pair is symmetric on random graphs") {
  const ClassTable& table = ClassTable::standard();
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(rng, 4 + rng.below(8), 2 + rng.below(8), 3);
    for (ArcId i = 0; i < g.arc_count(); ++i) {
      for (ArcId j = i + 1; j < g.arc_count(); ++j) {
        if (!oracle::incident(g.arc(i), g.arc(j)) || g.arc(i).same_sets(g.arc(j))) continue;
        CHECK(classify_pair(g, i, j, table) == classify_pair(g, j, i, table));
      }
    }
  }
}

TEST_CASE("external index map") {
  const ClassTable& table = ClassTable::standard();
  std::istringstream in("# comment\n10111101\t74\n10001100\t3\n");
  const auto map = ExternalIndexMap::parse(in, table);
  CHECK(map.find(*table.lookup(pat("10111101"))) == 74);
  CHECK(map.find(*table.lookup(pat("00110001"))) == 3);  // same class as its swap image
  CHECK_FALSE(map.find(*table.lookup(pat("10010010"))).has_value());

  std::istringstream bad_pattern("01000010\t1\n");
  CHECK_THROWS_AS(ExternalIndexMap::parse(bad_pattern, table), ParseError);
  std::istringstream bad_index("10111101\tx\n");
  CHECK_THROWS_AS(ExternalIndexMap::parse(bad_index, table), ParseError);
}
