#include "dhg/randomize.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>

namespace dhg {

namespace {

using NodeSet = std::vector<NodeId>;

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const NodeSet& a, const NodeSet& b) { return set_intersection(a, b).empty(); }

}  // namespace

std::pair<NodeSet, NodeSet> shuffle_sets(const ShuffleInput& in, Rng& rng) {
  if (!disjoint(in.first, in.first_fixed) || !disjoint(in.second, in.second_fixed)) {
    throw std::invalid_argument("shuffled set overlaps its fixed set");
  }
  const NodeSet common = set_intersection(in.first, in.second);
  const NodeSet exclusive = set_difference(set_union(in.first, in.second), common);
  const NodeSet movable = set_difference(set_difference(exclusive, in.first_fixed), in.second_fixed);

  // |first \ common \ second_fixed| of the movable nodes go to the first set.
  const std::size_t take = set_difference(set_difference(in.first, common), in.second_fixed).size();

  NodeSet pool = movable;
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  NodeSet to_first(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take));
  NodeSet to_second(pool.begin() + static_cast<std::ptrdiff_t>(take), pool.end());
  std::sort(to_first.begin(), to_first.end());
  std::sort(to_second.begin(), to_second.end());

  NodeSet out_first = set_union(set_union(common, set_intersection(in.first, in.second_fixed)), to_first);
  NodeSet out_second = set_union(set_union(common, set_intersection(in.second, in.first_fixed)), to_second);
  return {std::move(out_first), std::move(out_second)};
}

namespace {

enum class Role { head, tail };

// Pairs arcs by a random permutation and shuffles the `role` sets of each
// pair; an odd leftover is paired with a random already-shuffled arc.
std::vector<Hyperarc> shuffle_role(std::vector<Hyperarc> arcs, Role role, Rng& rng) {
  std::vector<std::size_t> order(arcs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  auto shuffle_pair = [role, &rng](Hyperarc& x, Hyperarc& y) {
    ShuffleInput in;
    if (role == Role::head) {
      in = {x.head, y.head, x.tail, y.tail};
    } else {
      in = {x.tail, y.tail, x.head, y.head};
    }
    auto [a, b] = shuffle_sets(in, rng);
    if (role == Role::head) {
      x.head = std::move(a);
      y.head = std::move(b);
    } else {
      x.tail = std::move(a);
      y.tail = std::move(b);
    }
  };

  std::vector<Hyperarc> done;
  done.reserve(arcs.size());
  for (std::size_t p = 0; p + 1 < order.size(); p += 2) {
    Hyperarc x = std::move(arcs[order[p]]);
    Hyperarc y = std::move(arcs[order[p + 1]]);
    shuffle_pair(x, y);
    done.push_back(std::move(x));
    done.push_back(std::move(y));
  }
  if (order.size() % 2 == 1) {
    Hyperarc x = std::move(arcs[order.back()]);
    const std::size_t pick = rng.below(done.size());
    Hyperarc y = std::move(done[pick]);
    done.erase(done.begin() + static_cast<std::ptrdiff_t>(pick));
    shuffle_pair(x, y);
    done.push_back(std::move(x));
    done.push_back(std::move(y));
  }
  return done;
}

}  // namespace

DirectedHypergraph randomize(const DirectedHypergraph& g, Rng& rng) {
  if (g.arc_count() < 2) throw std::invalid_argument("randomization needs at least two hyperarcs");
  auto arcs = shuffle_role(g.arcs(), Role::head, rng);
  arcs = shuffle_role(std::move(arcs), Role::tail, rng);
  return DirectedHypergraph(g.nodes(), std::move(arcs), DuplicatePolicy::keep);
}

}  // namespace dhg
