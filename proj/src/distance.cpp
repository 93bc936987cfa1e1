#include "cycperm/distance.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "cycperm/error.hpp"
#include "cycperm/numtheory.hpp"
#include "parallel.hpp"

namespace cycperm {

namespace {

using detail::parallel_for;

// q^k saturated at max.
std::uint64_t saturating_power(std::uint64_t q, std::size_t k, std::uint64_t max) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > max / q) return max + 1;
    v *= q;
  }
  return v;
}

u128 binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (static_cast<u128>(1) << 100)) return r;
  }
  return r;
}

std::size_t row_weight(const Matrix& m, std::size_t r) {
  std::size_t w = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) w += m(r, c) != 0;
  return w;
}

// Searches w-subsets of parity-check columns for a linearly dependent one,
// assuming every smaller subset is independent.
class ColumnSearch {
 public:
  ColumnSearch(const LinearCode& code)
      : field_(*code.field()), n_(code.length()), r_(code.parity_check().rows()), cols_(n_, Vector(r_)) {
    const Matrix& h = code.parity_check();
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = 0; i < r_; ++i) cols_[j][i] = h(i, j);
    }
  }

  // Returns the dependent w-subsets as bitmasks (all of them when collect is
  // set, otherwise at most one per first column).
  std::vector<std::uint64_t> level(std::size_t w, bool collect) const {
    std::vector<std::vector<std::uint64_t>> found(n_);
    std::atomic<bool> stop{false};
    parallel_for(n_, [&](std::size_t first) {
      if (stop.load(std::memory_order_relaxed)) return;
      State st(w, r_);
      st.chosen.push_back(first);
      if (w == 1) {
        if (is_zero(cols_[first])) found[first].push_back(mask(st.chosen));
      } else {
        if (!push(st, first)) return;  // cannot happen when smaller sets are independent
        dfs(st, w, collect, found[first], stop);
      }
      if (!found[first].empty() && !collect) stop = true;
    });
    std::vector<std::uint64_t> out;
    for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    return out;
  }

 private:
  struct State {
    State(std::size_t w, std::size_t r) : basis(w * r), pivots(w), scratch(r) { chosen.reserve(w); }
    std::vector<Field::Element> basis;
    std::vector<std::size_t> pivots;
    std::size_t depth = 0;
    std::vector<std::size_t> chosen;
    Vector scratch;
  };

  static bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](Field::Element e) { return e == 0; });
  }

  static std::uint64_t mask(const std::vector<std::size_t>& idx) {
    std::uint64_t m = 0;
    for (std::size_t i : idx) m |= std::uint64_t{1} << i;
    return m;
  }

  // Reduces column j against the basis into scratch; true if it is nonzero.
  bool reduce(State& st, std::size_t j) const {
    Vector& v = st.scratch;
    std::copy(cols_[j].begin(), cols_[j].end(), v.begin());
    for (std::size_t b = 0; b < st.depth; ++b) {
      const Field::Element c = v[st.pivots[b]];
      if (c == 0) continue;
      const Field::Element* row = st.basis.data() + b * r_;
      for (std::size_t i = 0; i < r_; ++i) {
        if (row[i] != 0) v[i] = field_.sub(v[i], field_.mul(c, row[i]));
      }
    }
    return !is_zero(v);
  }

  bool push(State& st, std::size_t j) const {
    if (!reduce(st, j)) return false;
    const Vector& v = st.scratch;
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    const Field::Element inv = field_.inv(v[p]);
    Field::Element* row = st.basis.data() + st.depth * r_;
    for (std::size_t i = 0; i < r_; ++i) row[i] = field_.mul(v[i], inv);
    st.pivots[st.depth] = p;
    ++st.depth;
    return true;
  }

  void dfs(State& st, std::size_t w, bool collect, std::vector<std::uint64_t>& out, std::atomic<bool>& stop) const {
    const std::size_t last = st.chosen.back();
    if (st.depth + 1 == w) {
      for (std::size_t j = last + 1; j < n_; ++j) {
        if (!reduce(st, j)) {
          st.chosen.push_back(j);
          out.push_back(mask(st.chosen));
          st.chosen.pop_back();
          if (!collect) return;
        }
      }
      return;
    }
    for (std::size_t j = last + 1; j + (w - st.depth - 1) < n_; ++j) {
      if (!collect && stop.load(std::memory_order_relaxed)) return;
      const std::size_t saved = st.depth;
      if (!push(st, j)) continue;
      st.chosen.push_back(j);
      dfs(st, w, collect, out, stop);
      st.chosen.pop_back();
      st.depth = saved;
      if (!collect && !out.empty()) return;
    }
  }

  const Field& field_;
  std::size_t n_;
  std::size_t r_;
  std::vector<Vector> cols_;
};

struct LevelOutcome {
  DistanceResult result;
  std::vector<std::uint64_t> supports;
};

LevelOutcome support_search(const LinearCode& code, std::uint64_t budget, bool collect, std::size_t upper) {
  const std::size_t n = code.length();
  LevelOutcome out;
  out.result.method = DistanceMethod::Support;
  ColumnSearch search(code);
  u128 spent = 0;
  for (std::size_t w = 1; w <= upper; ++w) {
    const u128 cost = binomial(n, w);
    if (spent + cost > budget) {
      out.result.lower = w;
      out.result.upper = upper;
      out.result.exact = false;
      out.result.method = DistanceMethod::Interval;
      out.result.work = static_cast<std::uint64_t>(spent);
      return out;
    }
    spent += cost;
    auto found = search.level(w, collect);
    if (!found.empty()) {
      out.result.lower = out.result.upper = w;
      out.result.exact = true;
      out.result.work = static_cast<std::uint64_t>(spent);
      out.supports = std::move(found);
      return out;
    }
  }
  throw Error("minimum distance search exceeded its upper bound");
}

std::size_t initial_upper(const LinearCode& code) {
  const std::size_t n = code.length(), k = code.dimension();
  std::size_t upper = n - k + 1;
  for (std::size_t r = 0; r < k; ++r) upper = std::min(upper, row_weight(code.generator(), r));
  return upper;
}

struct Chunking {
  std::size_t outer = 0;
  std::uint64_t chunks = 1;
};

// The top message digits are fixed per chunk so that there are at least 256
// chunks (or all of the message space).
Chunking chunking(const LinearCode& code) {
  Chunking c;
  while (c.outer < code.dimension() && c.chunks < 256) {
    c.chunks *= code.field()->order();
    ++c.outer;
  }
  return c;
}

// Calls visit(chunk, codeword) for every codeword.
template <typename Visit>
void enumerate_codewords(const LinearCode& code, Visit visit) {
  const Field& f = *code.field();
  const std::size_t n = code.length(), k = code.dimension();
  const std::uint32_t q = f.order();
  const auto [outer, chunks] = chunking(code);
  const std::size_t inner = k - outer;
  const Matrix& g = code.generator();
  parallel_for(chunks, [&](std::size_t chunk) {
    Vector word(n, 0);
    std::uint64_t rest = chunk;
    for (std::size_t d = 0; d < outer; ++d) {
      const Field::Element digit = static_cast<Field::Element>(rest % q);
      rest /= q;
      if (digit == 0) continue;
      const Field::Element* row = g.row_data(inner + d);
      for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], f.mul(digit, row[c]));
    }
    std::vector<Field::Element> digits(inner, 0);
    for (;;) {
      visit(chunk, word);
      std::size_t d = 0;
      for (; d < inner; ++d) {
        const Field::Element old = digits[d];
        const Field::Element nxt = old + 1 == q ? 0 : old + 1;
        digits[d] = nxt;
        const Field::Element delta = f.sub(nxt, old);
        const Field::Element* row = g.row_data(d);
        for (std::size_t c = 0; c < n; ++c) {
          if (row[c] != 0) word[c] = f.add(word[c], f.mul(delta, row[c]));
        }
        if (nxt != 0) break;
      }
      if (d == inner) break;
    }
  });
}

}  // namespace

std::size_t DistanceResult::value() const {
  if (!exact) throw Error("distance not certified");
  return lower;
}

std::string to_string(DistanceMethod method) {
  switch (method) {
    case DistanceMethod::Exhaustive:
      return "exhaustive";
    case DistanceMethod::Support:
      return "support";
    case DistanceMethod::Interval:
      return "interval";
  }
  return "interval";
}

WeightProfile weight_distribution(const LinearCode& code, std::uint64_t budget) {
  const std::uint64_t total = saturating_power(code.field()->order(), code.dimension(), budget);
  if (total > budget) throw BudgetExceeded("codeword enumeration exceeds budget", 0);
  const std::size_t n = code.length();
  std::vector<std::vector<std::uint64_t>> local(chunking(code).chunks, std::vector<std::uint64_t>(n + 1, 0));
  enumerate_codewords(code, [&](std::size_t chunk, const Vector& word) {
    std::size_t w = 0;
    for (Field::Element e : word) w += e != 0;
    ++local[chunk][w];
  });
  WeightProfile profile;
  profile.exact = true;
  for (std::size_t w = 0; w <= n; ++w) {
    std::uint64_t sum = 0;
    for (const auto& l : local) sum += l[w];
    if (sum != 0) profile.counts[w] = sum;
  }
  return profile;
}

DistanceResult min_distance(const LinearCode& code, std::uint64_t budget) {
  const std::size_t n = code.length(), k = code.dimension();
  DistanceResult r;
  if (k == 0) {
    r.lower = r.upper = n + 1;
    r.exact = true;
    r.method = DistanceMethod::Exhaustive;
    return r;
  }
  const std::uint64_t total = saturating_power(code.field()->order(), k, budget);
  if (total <= budget) {
    const WeightProfile p = weight_distribution(code, budget);
    auto it = p.counts.upper_bound(0);
    r.lower = r.upper = it->first;
    r.exact = true;
    r.method = DistanceMethod::Exhaustive;
    r.work = total;
    return r;
  }
  return support_search(code, budget, false, initial_upper(code)).result;
}

std::vector<std::uint64_t> min_weight_supports(const LinearCode& code, std::uint64_t budget) {
  const std::size_t n = code.length(), k = code.dimension();
  if (n > 64) throw Error("support bitmasks need n <= 64");
  if (k == 0) return {};
  const std::uint64_t total = saturating_power(code.field()->order(), k, budget);
  if (total <= budget) {
    const std::size_t d = min_distance(code, budget).value();
    std::vector<std::vector<std::uint64_t>> local(chunking(code).chunks);
    enumerate_codewords(code, [&](std::size_t chunk, const Vector& word) {
      std::uint64_t m = 0;
      std::size_t w = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (word[c] != 0) {
          m |= std::uint64_t{1} << c;
          ++w;
        }
      }
      if (w == d) local[chunk].push_back(m);
    });
    std::vector<std::uint64_t> all;
    for (auto& l : local) all.insert(all.end(), l.begin(), l.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
  }
  LevelOutcome o = support_search(code, budget, true, initial_upper(code));
  if (!o.result.exact) throw BudgetExceeded("minimum distance not certified within budget", o.result.lower);
  std::sort(o.supports.begin(), o.supports.end());
  return o.supports;
}

MdsReport is_mds(const LinearCode& code, const DistanceResult& distance) {
  const std::size_t d = distance.value();
  const std::size_t n = code.length(), k = code.dimension();
  MdsReport r;
  r.mds = d == n - k + 1;
  if (n >= 2 && d >= 2) r.gcd_condition = std::gcd(n - 2, d - 2) == 1;
  return r;
}

}  // namespace cycperm
