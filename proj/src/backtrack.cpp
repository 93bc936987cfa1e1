#include <algorithm>
#include <optional>
#include <unordered_set>

#include "cycperm/autgroups.hpp"
#include "cycperm/error.hpp"

namespace cycperm {

namespace {

// Minimum-weight supports of one code, with the statistics used for pruning.
struct SupportFamily {
  std::vector<std::uint64_t> supports;
  std::unordered_set<std::uint64_t> lookup;
  std::vector<std::uint32_t> incidence;            // per point
  std::vector<std::uint32_t> coincidence;          // n x n
  std::vector<std::vector<std::uint64_t>> ending;  // supports whose largest point is x

  SupportFamily(std::vector<std::uint64_t> s, std::size_t n)
      : supports(std::move(s)), incidence(n, 0), coincidence(n * n, 0), ending(n) {
    lookup.insert(supports.begin(), supports.end());
    for (std::uint64_t mask : supports) {
      std::vector<std::size_t> pts;
      for (std::size_t x = 0; x < n; ++x) {
        if (mask >> x & 1) pts.push_back(x);
      }
      for (std::size_t a : pts) {
        ++incidence[a];
        for (std::size_t b : pts) ++coincidence[a * n + b];
      }
      if (!pts.empty()) ending[pts.back()].push_back(mask);
    }
  }
};

class Backtracker {
 public:
  Backtracker(const LinearCode& code, std::vector<SupportFamily> families, std::uint64_t budget)
      : code_(code), n_(code.length()), families_(std::move(families)), budget_(budget), image_(n_), used_(n_) {}

  FullGroup run() {
    FullGroup out;
    out.orbit_lengths.assign(n_, 1);
    u128 order = 1;
    for (std::size_t level = n_; level-- > 0;) {
      // Orbit of `level` under the generators found so far, all of which fix
      // 0..level-1 pointwise.
      std::vector<bool> in_orbit(n_, false);
      in_orbit[level] = true;
      std::vector<std::size_t> orbit{level};
      auto grow = [&] {
        for (std::size_t i = 0; i < orbit.size(); ++i) {
          for (const Permutation& g : out.generators) {
            const std::size_t y = g(orbit[i]);
            if (!in_orbit[y]) {
              in_orbit[y] = true;
              orbit.push_back(y);
            }
          }
        }
      };
      grow();
      for (std::size_t j = level + 1; j < n_; ++j) {
        if (in_orbit[j]) continue;
        partial_ = order * orbit.size();
        if (auto sigma = search(level, j)) {
          out.generators.push_back(std::move(*sigma));
          grow();
        }
      }
      out.orbit_lengths[level] = orbit.size();
      order *= orbit.size();
    }
    out.order = order;
    out.nodes = nodes_;
    return out;
  }

 private:
  // A permutation in Per(C) fixing 0..level-1 and sending level to target.
  std::optional<Permutation> search(std::size_t level, std::size_t target) {
    std::fill(used_.begin(), used_.end(), false);
    for (std::size_t x = 0; x < level; ++x) {
      image_[x] = x;
      used_[x] = true;
    }
    if (!consistent(level, target)) return std::nullopt;
    image_[level] = target;
    used_[target] = true;
    if (!supports_close(level)) return std::nullopt;
    return extend(level + 1);
  }

  std::optional<Permutation> extend(std::size_t x) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("backtrack node budget exceeded",
                           partial_ > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(partial_));
    }
    if (x == n_) {
      std::vector<Permutation::Point> images(image_.begin(), image_.end());
      Permutation sigma = Permutation::unchecked(std::move(images));
      if (is_automorphism(code_, sigma)) return sigma;
      return std::nullopt;
    }
    for (std::size_t y = 0; y < n_; ++y) {
      if (used_[y] || !consistent(x, y)) continue;
      image_[x] = y;
      used_[y] = true;
      if (supports_close(x)) {
        if (auto found = extend(x + 1)) return found;
      }
      used_[y] = false;
    }
    return std::nullopt;
  }

  // Sending x to y respects incidence and co-incidence with points < x.
  bool consistent(std::size_t x, std::size_t y) const {
    for (const SupportFamily& f : families_) {
      if (f.incidence[x] != f.incidence[y]) return false;
      for (std::size_t z = 0; z < x; ++z) {
        if (f.coincidence[x * n_ + z] != f.coincidence[y * n_ + image_[z]]) return false;
      }
    }
    return true;
  }

  std::uint64_t map_mask(std::uint64_t mask) const {
    std::uint64_t img = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) img |= std::uint64_t{1} << image_[__builtin_ctzll(m)];
    return img;
  }

  // Points 0..x are assigned. Every support lying inside them must map to a
  // support, and the traces {S & assigned} must map onto the traces
  // {T & image} as multisets.
  bool supports_close(std::size_t x) {
    const std::uint64_t domain = x + 1 == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (x + 1)) - 1;
    std::uint64_t range = 0;
    for (std::size_t z = 0; z <= x; ++z) range |= std::uint64_t{1} << image_[z];
    for (const SupportFamily& f : families_) {
      for (std::uint64_t mask : f.ending[x]) {
        if (!f.lookup.count(map_mask(mask))) return false;
      }
      if (f.supports.size() > kTraceLimit) continue;
      lhs_.clear();
      rhs_.clear();
      for (std::uint64_t s : f.supports) {
        const std::uint64_t a = s & domain;
        if (a != 0) lhs_.push_back(map_mask(a));
        const std::uint64_t b = s & range;
        if (b != 0) rhs_.push_back(b);
      }
      if (lhs_.size() != rhs_.size()) return false;
      std::sort(lhs_.begin(), lhs_.end());
      std::sort(rhs_.begin(), rhs_.end());
      if (lhs_ != rhs_) return false;
    }
    return true;
  }

  static constexpr std::size_t kTraceLimit = 4096;

  const LinearCode& code_;
  std::size_t n_;
  std::vector<SupportFamily> families_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  u128 partial_ = 1;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> lhs_, rhs_;
};

}  // namespace

FullGroup backtrack_full_group(const LinearCode& code, std::uint64_t node_budget, std::uint64_t distance_budget) {
  const std::size_t n = code.length();
  if (n > 64) throw Error("backtrack supports n <= 64");
  // Per(C) = Per(dual C), so both support families constrain the search. A
  // family whose distance cannot be certified is simply left out.
  std::vector<SupportFamily> families;
  for (const LinearCode& c : {code, dual(code)}) {
    try {
      families.emplace_back(min_weight_supports(c, distance_budget), n);
    } catch (const BudgetExceeded&) {
    }
  }
  return Backtracker(code, std::move(families), node_budget).run();
}

}  // namespace cycperm
