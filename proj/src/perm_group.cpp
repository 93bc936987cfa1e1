#include "cycperm/perm_group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "cycperm/error.hpp"
#include "parallel.hpp"

namespace cycperm {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<Permutation> sorted_elements)
    : degree_(degree),
      generators_(std::move(generators)),
      elements_(std::move(sorted_elements)),
      enumerated_(true),
      order_(static_cast<u128>(elements_.size())) {}

PermGroup PermGroup::with_order(std::size_t degree, std::vector<Permutation> generators, std::optional<u128> order) {
  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.order_ = order;
  return g;
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}, {Permutation(degree)}); }

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<Permutation> gens;
  std::unordered_set<Permutation> span{Permutation(degree)};
  for (const Permutation& e : elements) {
    if (span.count(e)) continue;
    gens.push_back(e);
    const PermGroup h = group_closure(degree, gens, elements.size());
    span = std::unordered_set<Permutation>(h.elements().begin(), h.elements().end());
    if (span.size() == elements.size()) break;
  }
  if (span.size() != elements.size()) throw Error("element list is not a group");
  return PermGroup(degree, std::move(gens), std::move(elements));
}

bool PermGroup::contains(const Permutation& p) const {
  if (!enumerated_) throw Error("group is not enumerated");
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::contains(const PermGroup& other) const {
  for (const Permutation& p : other.elements()) {
    if (!contains(p)) return false;
  }
  return other.enumerated();
}

PermGroup group_closure(std::size_t degree, const std::vector<Permutation>& generators, std::uint64_t bound) {
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw Error("generator degree mismatch");
  }
  std::unordered_set<Permutation> seen;
  std::vector<Permutation> order;
  std::deque<Permutation> queue;
  Permutation id(degree);
  seen.insert(id);
  order.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& g : generators) {
      Permutation y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > bound) throw BudgetExceeded("group enumeration bound exceeded", seen.size());
        order.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  std::sort(order.begin(), order.end());
  return PermGroup(degree, generators, std::move(order));
}

std::vector<Orbit> orbits(std::size_t degree, const std::vector<Permutation>& generators) {
  std::vector<int> label(degree, -1);
  std::vector<Orbit> out;
  for (std::size_t start = 0; start < degree; ++start) {
    if (label[start] >= 0) continue;
    Orbit orbit{static_cast<Permutation::Point>(start)};
    label[start] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const Permutation& g : generators) {
        const auto y = g(orbit[i]);
        if (label[y] < 0) {
          label[y] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(std::size_t degree, const std::vector<Permutation>& generators) {
  return degree <= 1 || orbits(degree, generators).size() == 1;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

BlockSystem canonical(std::vector<Orbit> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return BlockSystem{std::move(blocks)};
}

// a is a refinement of b (every block of a inside a block of b).
bool refines(const BlockSystem& a, const BlockSystem& b, std::size_t degree) {
  std::vector<std::size_t> where(degree);
  for (std::size_t i = 0; i < b.blocks.size(); ++i) {
    for (auto x : b.blocks[i]) where[x] = i;
  }
  for (const auto& block : a.blocks) {
    for (auto x : block) {
      if (where[x] != where[block.front()]) return false;
    }
  }
  return true;
}

}  // namespace

BlockSystem block_system_containing(std::size_t degree, const std::vector<Permutation>& generators, std::size_t x) {
  UnionFind uf(degree);
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  if (uf.unite(0, x)) queue.emplace_back(0, x);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [a, b] = queue[i];
    for (const Permutation& g : generators) {
      const std::size_t ga = uf.find(g(a)), gb = uf.find(g(b));
      if (ga != gb) {
        uf.unite(ga, gb);
        queue.emplace_back(ga, gb);
      }
    }
  }
  std::vector<Orbit> blocks;
  std::vector<int> index(degree, -1);
  for (std::size_t v = 0; v < degree; ++v) {
    const std::size_t r = uf.find(v);
    if (index[r] < 0) {
      index[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[index[r]].push_back(static_cast<Permutation::Point>(v));
  }
  return canonical(std::move(blocks));
}

std::vector<BlockSystem> minimal_blocks(std::size_t degree, const std::vector<Permutation>& generators) {
  if (!is_transitive(degree, generators)) throw Error("group is not transitive");
  std::vector<BlockSystem> candidates;
  for (std::size_t x = 1; x < degree; ++x) {
    BlockSystem b = block_system_containing(degree, generators, x);
    if (!b.nontrivial()) continue;
    if (std::find(candidates.begin(), candidates.end(), b) == candidates.end()) candidates.push_back(std::move(b));
  }
  std::vector<BlockSystem> out;
  for (const auto& b : candidates) {
    bool minimal = true;
    for (const auto& other : candidates) {
      if (!(other == b) && other.block_size() < b.block_size() && refines(other, b, degree)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(b);
  }
  std::sort(out.begin(), out.end(), [](const BlockSystem& a, const BlockSystem& b) { return a.blocks < b.blocks; });
  return out;
}

bool is_primitive(std::size_t degree, const std::vector<Permutation>& generators) {
  return minimal_blocks(degree, generators).empty();
}

bool is_block_system(const std::vector<Permutation>& generators, const BlockSystem& system) {
  std::size_t degree = 0;
  for (const auto& b : system.blocks) degree += b.size();
  std::vector<std::size_t> where(degree, degree);
  for (std::size_t i = 0; i < system.blocks.size(); ++i) {
    if (system.blocks[i].size() != system.block_size()) return false;
    for (auto x : system.blocks[i]) {
      if (x >= degree || where[x] != degree) return false;
      where[x] = i;
    }
  }
  for (const Permutation& g : generators) {
    if (g.degree() != degree) return false;
    for (const auto& block : system.blocks) {
      const std::size_t target = where[g(block.front())];
      for (auto x : block) {
        if (where[g(x)] != target) return false;
      }
    }
  }
  return true;
}

BlockSystem residue_blocks(std::size_t n, std::size_t b) {
  if (b == 0 || n % b != 0) throw Error("modulus must divide the degree");
  std::vector<Orbit> blocks(b);
  for (std::size_t i = 0; i < n; ++i) blocks[i % b].push_back(static_cast<Permutation::Point>(i));
  return canonical(std::move(blocks));
}

std::vector<Permutation> filter_symmetric(std::size_t n, const std::function<bool(const Permutation&)>& pred) {
  if (n > kMaxBruteDegree) throw Error("degree too large for exhaustive scan");
  if (n <= 1) {
    Permutation id(n);
    return pred(id) ? std::vector<Permutation>{id} : std::vector<Permutation>{};
  }
  // One task per choice of (sigma(0), sigma(1)); tasks are visited in
  // lexicographic order so concatenation preserves it.
  const std::size_t tasks = n * (n - 1);
  std::vector<std::vector<Permutation>> found(tasks);
  detail::parallel_for(tasks, [&](std::size_t t) {
    const std::size_t a = t / (n - 1);
    std::size_t b = t % (n - 1);
    if (b >= a) ++b;
    std::vector<Permutation::Point> images{static_cast<Permutation::Point>(a), static_cast<Permutation::Point>(b)};
    for (std::size_t v = 0; v < n; ++v) {
      if (v != a && v != b) images.push_back(static_cast<Permutation::Point>(v));
    }
    do {
      Permutation p = Permutation::unchecked(images);
      if (pred(p)) found[t].push_back(std::move(p));
    } while (std::next_permutation(images.begin() + 2, images.end()));
  });
  std::vector<Permutation> out;
  for (auto& f : found) {
    for (auto& p : f) out.push_back(std::move(p));
  }
  return out;
}

std::optional<Permutation> first_in_symmetric(std::size_t n, const std::function<bool(const Permutation&)>& pred) {
  if (n > kMaxBruteDegree) throw Error("degree too large for exhaustive scan");
  if (n <= 1) {
    Permutation id(n);
    return pred(id) ? std::optional<Permutation>(id) : std::nullopt;
  }
  const std::size_t tasks = n * (n - 1);
  std::vector<std::optional<Permutation>> found(tasks);
  std::atomic<std::size_t> best{tasks};
  detail::parallel_for(tasks, [&](std::size_t t) {
    if (t > best.load()) return;
    const std::size_t a = t / (n - 1);
    std::size_t b = t % (n - 1);
    if (b >= a) ++b;
    std::vector<Permutation::Point> images{static_cast<Permutation::Point>(a), static_cast<Permutation::Point>(b)};
    for (std::size_t v = 0; v < n; ++v) {
      if (v != a && v != b) images.push_back(static_cast<Permutation::Point>(v));
    }
    do {
      Permutation p = Permutation::unchecked(images);
      if (pred(p)) {
        found[t] = std::move(p);
        std::size_t cur = best.load();
        while (t < cur && !best.compare_exchange_weak(cur, t)) {
        }
        return;
      }
    } while (std::next_permutation(images.begin() + 2, images.end()) && t <= best.load());
  });
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

namespace {

bool normalizes(const Permutation& sigma, const PermGroup& group) {
  const Permutation inv = sigma.inverse();
  for (const Permutation& g : group.generators()) {
    if (!group.contains(inv * g * sigma)) return false;
  }
  return true;
}

}  // namespace

PermGroup normalizer_in_symmetric(const PermGroup& group) {
  if (group.degree() > kMaxBruteDegree) throw Error("degree too large for exhaustive normalizer");
  if (!group.enumerated()) throw Error("group is not enumerated");
  auto elements = filter_symmetric(group.degree(), [&](const Permutation& s) { return normalizes(s, group); });
  return PermGroup::from_elements(group.degree(), std::move(elements));
}

PermGroup normalizer_within(const PermGroup& group, const PermGroup& ambient) {
  if (!group.enumerated() || !ambient.enumerated()) throw Error("group is not enumerated");
  std::vector<Permutation> elements;
  for (const Permutation& s : ambient.elements()) {
    if (normalizes(s, group)) elements.push_back(s);
  }
  return PermGroup::from_elements(group.degree(), std::move(elements));
}

u128 p_part(u128 order, std::uint64_t p) {
  u128 part = 1;
  while (order % p == 0) {
    order /= p;
    part *= p;
  }
  return part;
}

std::optional<unsigned> p_exponent(u128 value, std::uint64_t p) {
  unsigned e = 0;
  while (value > 1 && value % p == 0) {
    value /= p;
    ++e;
  }
  if (value != 1) return std::nullopt;
  return e;
}

PermGroup sylow_ascend(const PermGroup& ambient, std::uint64_t p, const PermGroup& seed) {
  if (!ambient.enumerated() || !seed.enumerated()) throw Error("group is not enumerated");
  if (!p_exponent(seed.elements().size(), p)) throw Error("seed is not a p-group");
  if (!ambient.contains(seed)) throw Error("seed is not contained in the ambient group");
  const u128 target = p_part(ambient.elements().size(), p);
  PermGroup current = seed;
  while (current.elements().size() < target) {
    const std::vector<Permutation> gens = current.generators();
    const Permutation* extension = nullptr;
    for (const Permutation& x : ambient.elements()) {
      if (current.contains(x) || !p_exponent(x.order(), p)) continue;
      if (normalizes(x, current)) {
        extension = &x;
        break;
      }
    }
    if (extension == nullptr) throw Error("normalizer ascent found no p-element");
    std::vector<Permutation> next_gens = gens;
    next_gens.push_back(*extension);
    current = group_closure(ambient.degree(), next_gens, ambient.elements().size());
  }
  return current;
}

}  // namespace cycperm
