#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "dhg/generate.hpp"

using namespace dhg;

TEST_CASE("small generated graph") {
  const auto g = generate(GenSpec{10, 2.0, 4, 1});
  CHECK(g.arc_count() == 20);
  CHECK(g.node_count() == 10);
  for (const Hyperarc& a : g.arcs()) {
    CHECK(is_valid_arc(a));
    CHECK(a.size() >= 2);
    CHECK(a.size() <= 4);
    CHECK(a.tail.size() == a.size() / 2);
    CHECK(a.head.size() == (a.size() + 1) / 2);
  }
  for (NodeId v = 0; v < 10; ++v) CHECK(g.label(v) == std::to_string(v));
}

TEST_CASE("k = 2 gives singleton arcs") {
  const auto g = generate(GenSpec{30, 3.0, 2, 7});
  CHECK(g.arc_count() == 90);
  for (const Hyperarc& a : g.arcs()) {
    CHECK(a.tail.size() == 1);
    CHECK(a.head.size() == 1);
  }
}

TEST_CASE("arc sizes are uniform on 2..k") {
  constexpr std::size_t k = 6;
  const auto g = generate(GenSpec{1000, 100.0, k, 2024});
  REQUIRE(g.arc_count() == 100000);
  std::map<std::size_t, int> sizes;
  for (const Hyperarc& a : g.arcs()) ++sizes[a.size()];
  CHECK(sizes.size() == k - 1);
  const double n = 100000, p = 1.0 / (k - 1);
  for (const auto& [size, count] : sizes) {
    INFO("size ", size);
    CHECK(std::abs(count - n * p) <= 3 * std::sqrt(n * p * (1 - p)));
  }
}

TEST_CASE("generation is deterministic and thread-independent") {
  const GenSpec spec{200, 5.0, 8, 99};
  const std::string one = to_text(generate(spec, 1));
  CHECK(to_text(generate(spec, 1)) == one);
  CHECK(to_text(generate(spec, 4)) == one);
  GenSpec other = spec;
  other.seed = 100;
  CHECK(to_text(generate(other)) != one);
}

TEST_CASE("dedup removes repeated arcs") {
  const GenSpec spec{3, 20.0, 2, 5};
  const auto raw = generate(spec);
  const auto unique = generate(spec, 1, true);
  CHECK(raw.arc_count() == 60);
  CHECK(unique.arc_count() <= 6);
  for (ArcId i = 0; i < unique.arc_count(); ++i)
    for (ArcId j = i + 1; j < unique.arc_count(); ++j) CHECK_FALSE(unique.arc(i).same_sets(unique.arc(j)));
}

TEST_CASE("GenSpec validation") {
  CHECK(GenSpec{10, 2.0, 4, 0}.arc_count() == 20);
  CHECK(GenSpec{3, 0.5, 2, 0}.arc_count() == 2);
  CHECK_THROWS_AS(GenSpec({10, 0.01, 4, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(GenSpec({10, 1.0, 1, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(GenSpec({10, 1.0, 11, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(generate(GenSpec{10, 1.0, 11, 0}), std::invalid_argument);
}
