#include <doctest.h>

#include <cmath>
#include <numeric>

#include "dhg/error.hpp"
#include "dhg/generate.hpp"
#include "dhg/profile.hpp"
#include "oracles.hpp"

using namespace dhg;

namespace {

const ClassTable& table() { return ClassTable::standard(); }

double norm(const ClassVector& v) { return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0)); }

CountVector counts(std::initializer_list<double> head) {
  CountVector c;
  std::copy(head.begin(), head.end(), c.values.begin());
  return c;
}

ClassVector random_vector(Rng& rng) {
  ClassVector v{};
  for (double& x : v) x = 2 * rng.unit() - 1;
  return v;
}

}  // namespace

TEST_CASE("significance examples") {
  const ClassVector same = significance(counts({3, 5, 0}), counts({3, 5, 0}));
  CHECK(norm(same) == 0);

  const ClassVector mu = significance(counts({10, 0}), counts({0, 0}));
  CHECK(mu[0] == doctest::Approx(10.0 / 11.0));
  CHECK(mu[1] == 0);

  CHECK(significance(counts({10}), counts({0}), 0.5)[0] == doctest::Approx(10.0 / 10.5));
  CHECK_THROWS_AS(significance(counts({1}), counts({1}), 0), std::invalid_argument);
  CHECK_THROWS_AS(significance(counts({-1}), counts({1}), 1), std::invalid_argument);
}

TEST_CASE("significance is antisymmetric and bounded") {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    CountVector a, b;
    for (std::size_t i = 0; i < kNumClasses; ++i) {
      a.values[i] = static_cast<double>(rng.below(50));
      b.values[i] = 100 * rng.unit();
    }
    const ClassVector ab = significance(a, b), ba = significance(b, a);
    for (std::size_t i = 0; i < kNumClasses; ++i) {
      CHECK(ab[i] == -ba[i]);
      CHECK(std::abs(ab[i]) < 1);
    }
  }
}

TEST_CASE("characteristic profile") {
  ClassVector mu{};
  mu[4] = 0.5;
  const ClassVector unit = characteristic_profile(mu);
  for (std::size_t i = 0; i < kNumClasses; ++i) CHECK(unit[i] == (i == 4 ? 1.0 : 0.0));

  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const ClassVector v = random_vector(rng);
    const ClassVector cp = characteristic_profile(v);
    CHECK(std::abs(norm(cp) - 1) <= 1e-9);
    ClassVector scaled = v;
    const double c = 0.01 + 100 * rng.unit();
    for (double& x : scaled) x *= c;
    const ClassVector cp_scaled = characteristic_profile(scaled);
    for (std::size_t i = 0; i < kNumClasses; ++i) CHECK(cp_scaled[i] == doctest::Approx(cp[i]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(characteristic_profile(ClassVector{}), PreconditionError);
}

TEST_CASE("profile of a randomization-invariant graph is degenerate") {
  // Both arcs share the head, so every randomization reproduces the graph.
  const auto g = parse_hypergraph("a\tb\nc\tb\n");
  ProfileOptions options;
  options.randomizations = 1;
  CHECK_THROWS_AS(profile_graph(g, table(), options), PreconditionError);
}

TEST_CASE("profile of a synthetic graph") {
  const auto g = generate(GenSpec{60, 100.0 / 60.0, 4, 8});
  REQUIRE(g.arc_count() == 100);
  ProfileOptions options;
  options.seed = 5;
  const ProfileResult a = profile_graph(g, table(), options);
  CHECK(std::abs(norm(a.cp) - 1) <= 1e-9);
  CHECK(a.real_counts == count_exact(g, table()));
  const ProfileResult b = profile_graph(g, table(), options);
  CHECK(a.cp == b.cp);
  CHECK(a.randomized_mean == b.randomized_mean);
  CHECK_THROWS_AS(profile_graph(g, table(), ProfileOptions{Algorithm::exact, 1.0, 0, 1.0, 0, 1}), std::invalid_argument);
}

TEST_CASE("estimated profiles track the exact profile") {
  const auto g = generate(GenSpec{100, 2.0, 5, 321});
  REQUIRE(g.arc_count() == 200);
  double total = 0;
  constexpr int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    ProfileOptions exact;
    exact.seed = static_cast<std::uint64_t>(s);
    ProfileOptions sampled = exact;
    sampled.algorithm = Algorithm::coda_a;
    sampled.q = 50;
    total += cos_metric(profile_graph(g, table(), exact).cp, profile_graph(g, table(), sampled).cp);
  }
  CHECK(total / seeds >= 0.95);
}

TEST_CASE("pearson similarity") {
  Rng rng(29);
  for (int t = 0; t < 50; ++t) {
    const ClassVector a = random_vector(rng), b = random_vector(rng);
    ClassVector neg = a;
    for (double& x : neg) x = -x;
    CHECK(pearson_similarity(a, a) == doctest::Approx(1.0));
    CHECK(pearson_similarity(a, neg) == doctest::Approx(-1.0));
    CHECK(pearson_similarity(a, b) == pearson_similarity(b, a));
    const double r = pearson_similarity(a, b);
    CHECK(r >= -1);
    CHECK(r <= 1);
  }
  ClassVector flat{};
  flat.fill(0.3);
  CHECK_THROWS_AS(pearson_similarity(flat, random_vector(rng)), std::invalid_argument);
}

TEST_CASE("similarity matrix") {
  Rng rng(31);
  const ClassVector a = random_vector(rng);
  const auto twin = similarity_matrix({a, a});
  CHECK(twin[0][0] == 1);
  CHECK(twin[0][1] == doctest::Approx(1.0));
  CHECK(twin[1][0] == doctest::Approx(1.0));
  CHECK(twin[1][1] == 1);

  std::vector<ClassVector> many;
  for (int i = 0; i < 6; ++i) many.push_back(random_vector(rng));
  const auto m = similarity_matrix(many);
  for (std::size_t i = 0; i < m.size(); ++i) {
    CHECK(m[i][i] == 1);
    for (std::size_t j = 0; j < m.size(); ++j) CHECK(std::abs(m[i][j] - m[j][i]) <= 1e-12);
  }
  CHECK_THROWS_AS(similarity_matrix({a}), std::invalid_argument);
}

TEST_CASE("err metric") {
  CHECK(err_metric(counts({10}), counts({8, 2})) == doctest::Approx(0.4));
  CHECK(err_metric(counts({3, 4, 5}), counts({3, 4, 5})) == 0);
  CHECK(err_metric(counts({1, 2, 3}), counts({3, 2, 1})) == err_metric(counts({3, 2, 1}), counts({1, 2, 3})));
  CHECK_THROWS_AS(err_metric(CountVector{}, counts({1})), std::invalid_argument);

  Rng rng(37);
  for (int t = 0; t < 50; ++t) {
    CountVector exact, est;
    for (std::size_t i = 0; i < kNumClasses; ++i) {
      exact.values[i] = static_cast<double>(rng.below(20));
      est.values[i] = 20 * rng.unit();
    }
    exact.values[0] += 1;
    CHECK(err_metric(exact, est) >= 0);
    CHECK(err_metric(exact, exact) == 0);
    CountVector pe = exact, ps = est;
    std::reverse(pe.values.begin(), pe.values.end());
    std::reverse(ps.values.begin(), ps.values.end());
    CHECK(err_metric(pe, ps) == doctest::Approx(err_metric(exact, est)));
  }
}

TEST_CASE("cos metric") {
  ClassVector x{}, y{};
  x[0] = 1;
  y[1] = 1;
  CHECK(cos_metric(x, x) == 1);
  CHECK(cos_metric(x, y) == 0);
  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const double c = cos_metric(characteristic_profile(random_vector(rng)), characteristic_profile(random_vector(rng)));
    CHECK(c >= -1 - 1e-12);
    CHECK(c <= 1 + 1e-12);
  }
}

TEST_CASE("snapshots") {
  const auto g = parse_hypergraph(
      "a\tb\t0\n"
      "b\tc\t10\n"
      "c\td\t20\n"
      "d\ta\t25\n"
      "a\tc\t40\n");
  const SnapshotSeries four = snapshots(g, table(), 4);
  REQUIRE(four.snapshots.size() == 4);
  const std::vector<std::size_t> arcs = {2, 3, 4, 5};
  for (std::size_t i = 0; i < 4; ++i) CHECK(four.snapshots[i].num_arcs == arcs[i]);
  CHECK(four.snapshots[0].threshold == 10);
  CHECK(four.snapshots[3].threshold == 40);
  CHECK(four.snapshots[0].num_nodes == 3);

  const SnapshotSeries one = snapshots(g, table(), 1);
  REQUIRE(one.snapshots.size() == 1);
  CHECK(one.snapshots[0].counts == count_exact(g, table()));

  const auto flat = parse_hypergraph("a\tb\t5\nb\tc\t5\n");
  CHECK(snapshots(flat, table(), 10).snapshots.size() == 1);

  CHECK_THROWS_AS(snapshots(g, table(), 0), std::invalid_argument);
  CHECK_THROWS_AS(snapshots(parse_hypergraph("a\tb\nb\tc\t1\n"), table(), 2), std::invalid_argument);

  const SnapshotSeries yearly = snapshots_per_timestamp(g, table());
  CHECK(yearly.snapshots.size() == 5);
  CHECK(yearly.snapshots.back().num_arcs == 5);
}

TEST_CASE("snapshots nest and ratios normalize") {
  Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    std::string text;
    const std::size_t arcs = 5 + rng.below(40);
    for (std::size_t i = 0; i < arcs; ++i) {
      const auto u = rng.below(15);
      auto v = rng.below(15);
      if (v == u) v = (v + 1) % 15;
      text += "n" + std::to_string(u) + "\tn" + std::to_string(v) + "\t" + std::to_string(rng.below(1000)) + "\n";
    }
    const auto g = parse_hypergraph(text);
    const SnapshotSeries series = snapshots(g, table(), 1 + rng.below(10));
    for (std::size_t i = 0; i < series.snapshots.size(); ++i) {
      const Snapshot& s = series.snapshots[i];
      if (i > 0) {
        CHECK(s.threshold > series.snapshots[i - 1].threshold);
        CHECK(s.num_arcs >= series.snapshots[i - 1].num_arcs);
        for (std::size_t c = 0; c < kNumClasses; ++c) CHECK(s.counts.values[c] >= series.snapshots[i - 1].counts.values[c]);
      }
      const double sum = std::accumulate(s.ratios.begin(), s.ratios.end(), 0.0);
      if (s.counts.classified_total() > 0) CHECK(sum == doctest::Approx(1.0));
      else CHECK(sum == 0);
    }
    CHECK(series.snapshots.back().num_arcs == g.arc_count());
  }
}
