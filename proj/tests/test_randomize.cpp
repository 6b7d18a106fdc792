#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "dhg/randomize.hpp"
#include "oracles.hpp"

using namespace dhg;

namespace {

using Nodes = std::vector<NodeId>;

std::multiset<NodeId> merged(const Nodes& a, const Nodes& b) {
  std::multiset<NodeId> out(a.begin(), a.end());
  out.insert(b.begin(), b.end());
  return out;
}

bool meets(const Nodes& a, const Nodes& b) {
  return std::any_of(a.begin(), a.end(), [&](NodeId v) { return std::binary_search(b.begin(), b.end(), v); });
}

Nodes random_subset(Rng& rng, std::size_t universe, std::size_t max_size, const Nodes& avoid) {
  std::set<NodeId> out;
  const std::size_t want = rng.below(max_size + 1);
  for (std::size_t t = 0; t < 4 * want && out.size() < want; ++t) {
    const auto v = static_cast<NodeId>(rng.below(universe));
    if (!std::binary_search(avoid.begin(), avoid.end(), v)) out.insert(v);
  }
  return Nodes(out.begin(), out.end());
}

struct RoleDegrees {
  std::vector<std::size_t> head, tail;
  std::multiset<std::pair<std::size_t, std::size_t>> sizes;
};

RoleDegrees role_degrees(const DirectedHypergraph& g) {
  RoleDegrees d;
  d.head.assign(g.node_count(), 0);
  d.tail.assign(g.node_count(), 0);
  for (const Hyperarc& a : g.arcs()) {
    for (NodeId v : a.head) ++d.head[v];
    for (NodeId v : a.tail) ++d.tail[v];
    d.sizes.insert({a.tail.size(), a.head.size()});
  }
  return d;
}

}  // namespace

TEST_CASE("shuffle of identical sets is the identity") {
  Rng rng(0);
  const auto [a, b] = shuffle_sets({{7}, {7}, {}, {}}, rng);
  CHECK(a == Nodes{7});
  CHECK(b == Nodes{7});
}

TEST_CASE("a node in the other arc's fixed set stays put") {
  // S1={a,b}, S2={c}, F1={}, F2={a}
  constexpr NodeId a = 0, b = 1, c = 2;
  Rng rng(11);
  int b_first = 0;
  constexpr int trials = 4000;
  for (int t = 0; t < trials; ++t) {
    const auto [s1, s2] = shuffle_sets({{a, b}, {c}, {}, {a}}, rng);
    REQUIRE(s1.size() == 2);
    REQUIRE(s2.size() == 1);
    CHECK(s1.front() == a);
    if (s1 == Nodes{a, b}) {
      ++b_first;
      CHECK(s2 == Nodes{c});
    } else {
      CHECK(s1 == Nodes{a, c});
      CHECK(s2 == Nodes{b});
    }
  }
  CHECK(std::abs(b_first - trials / 2) < 200);
}

TEST_CASE("shuffle rejects inputs that overlap their fixed set") {
  Rng rng(0);
  CHECK_THROWS_AS(shuffle_sets({{1, 2}, {3}, {2}, {}}, rng), std::invalid_argument);
  CHECK_THROWS_AS(shuffle_sets({{1}, {3}, {}, {3}}, rng), std::invalid_argument);
}

TEST_CASE("shuffle conserves sizes and the multiset union") {
  Rng rng(100);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t universe = 2 + rng.below(12);
    ShuffleInput in;
    in.first_fixed = random_subset(rng, universe, 3, {});
    in.second_fixed = random_subset(rng, universe, 3, {});
    in.first = random_subset(rng, universe, 5, in.first_fixed);
    in.second = random_subset(rng, universe, 5, in.second_fixed);
    const auto [s1, s2] = shuffle_sets(in, rng);
    CHECK(s1.size() == in.first.size());
    CHECK(s2.size() == in.second.size());
    CHECK(merged(s1, s2) == merged(in.first, in.second));
    CHECK_FALSE(meets(s1, in.first_fixed));
    CHECK_FALSE(meets(s2, in.second_fixed));
    CHECK(std::is_sorted(s1.begin(), s1.end()));
    CHECK(std::is_sorted(s2.begin(), s2.end()));
    for (NodeId v : in.first) {
      if (std::binary_search(in.second.begin(), in.second.end(), v)) {
        CHECK(std::binary_search(s1.begin(), s1.end(), v));
        CHECK(std::binary_search(s2.begin(), s2.end(), v));
      }
      if (std::binary_search(in.second_fixed.begin(), in.second_fixed.end(), v)) {
        CHECK(std::binary_search(s1.begin(), s1.end(), v));
      }
    }
  }
}

TEST_CASE("randomize preserves role degrees, size pairs and loop-freeness") {
  Rng graphs(55);
  for (int gi = 0; gi < 20; ++gi) {
    const auto g = oracle::random_graph(graphs, 8 + graphs.below(25), 2 + graphs.below(40), 5);
    const RoleDegrees before = role_degrees(g);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Rng rng(seed);
      const auto h = randomize(g, rng);
      REQUIRE(h.arc_count() == g.arc_count());
      CHECK(h.node_count() == g.node_count());
      const RoleDegrees after = role_degrees(h);
      CHECK(after.head == before.head);
      CHECK(after.tail == before.tail);
      CHECK(after.sizes == before.sizes);
      for (const Hyperarc& a : h.arcs()) CHECK(is_valid_arc(a));
    }
  }
}

TEST_CASE("randomize of two singleton arcs is a fair coin") {
  const auto g = parse_hypergraph("a\tb\nc\td\n");
  const NodeId a = *g.nodes().find("a"), b = *g.nodes().find("b");
  int kept = 0;
  constexpr int seeds = 10000;
  for (int s = 0; s < seeds; ++s) {
    Rng rng(derive_seed(9, s));
    const auto h = randomize(g, rng);
    const bool ab = std::any_of(h.arcs().begin(), h.arcs().end(), [&](const Hyperarc& x) {
      return x.tail == std::vector<NodeId>{a} && x.head == std::vector<NodeId>{b};
    });
    kept += ab;
  }
  const double freq = static_cast<double>(kept) / seeds;
  CHECK(freq >= 0.45);
  CHECK(freq <= 0.55);
}

TEST_CASE("randomize may create duplicates and keeps them") {
  const auto g = parse_hypergraph("a\tb\nc\td\na\td\n");
  bool saw_duplicate = false;
  for (std::uint64_t s = 0; s < 200 && !saw_duplicate; ++s) {
    Rng rng(s);
    const auto h = randomize(g, rng);
    CHECK(h.arc_count() == 3);
    for (ArcId i = 0; i < h.arc_count(); ++i)
      for (ArcId j = i + 1; j < h.arc_count(); ++j) saw_duplicate |= h.arc(i).same_sets(h.arc(j));
  }
  CHECK(saw_duplicate);
}

TEST_CASE("randomize is deterministic per seed and needs two arcs") {
  Rng graphs(3);
  const auto g = oracle::random_graph(graphs, 20, 15, 4);
  Rng r1(5), r2(5);
  CHECK(to_text(randomize(g, r1)) == to_text(randomize(g, r2)));
  Rng rng(0);
  CHECK_THROWS_AS(randomize(parse_hypergraph("a\tb\n"), rng), std::invalid_argument);
}
