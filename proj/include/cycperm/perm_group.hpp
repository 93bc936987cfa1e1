#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cycperm/numtheory.hpp"
#include "cycperm/permutation.hpp"

namespace cycperm {

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

/// A finitely generated subgroup of S_n. Groups within the enumeration bound
/// carry their full element list (sorted lexicographically by image array);
/// larger ones carry generators and, when known, the order.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<Permutation> sorted_elements);
  /// Generators plus an order established elsewhere (no element list).
  static PermGroup with_order(std::size_t degree, std::vector<Permutation> generators, std::optional<u128> order);
  static PermGroup trivial(std::size_t degree);
  /// Takes an arbitrary element list of a group; sorts it and picks a
  /// generating set greedily in lexicographic order.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  bool enumerated() const noexcept { return enumerated_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::optional<u128> order() const noexcept { return order_; }
  /// Binary search in the element list; requires enumerated().
  bool contains(const Permutation& p) const;
  /// Every element of other lies in this group (both enumerated).
  bool contains(const PermGroup& other) const;

  bool operator==(const PermGroup& other) const { return elements_ == other.elements_ && degree_ == other.degree_; }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  bool enumerated_ = false;
  std::optional<u128> order_;
};

/// Breadth-first closure of the generators. Throws BudgetExceeded carrying
/// the number of elements found when more than bound elements appear.
PermGroup group_closure(std::size_t degree, const std::vector<Permutation>& generators,
                        std::uint64_t bound = kDefaultEnumerationBound);

using Orbit = std::vector<Permutation::Point>;

/// Orbit partition under the generated group, sorted by least point.
std::vector<Orbit> orbits(std::size_t degree, const std::vector<Permutation>& generators);
bool is_transitive(std::size_t degree, const std::vector<Permutation>& generators);

struct BlockSystem {
  std::vector<Orbit> blocks;  // each sorted, sorted by least point

  std::size_t block_size() const noexcept { return blocks.empty() ? 0 : blocks.front().size(); }
  std::size_t block_count() const noexcept { return blocks.size(); }
  bool nontrivial() const noexcept { return block_count() > 1 && block_size() > 1; }
  bool operator==(const BlockSystem&) const = default;
};

/// Finest block system with 0 and x in one block (Atkinson's union-find).
BlockSystem block_system_containing(std::size_t degree, const std::vector<Permutation>& generators, std::size_t x);

/// All minimal nontrivial block systems of a transitive group. Throws
/// Error("group is not transitive") otherwise.
std::vector<BlockSystem> minimal_blocks(std::size_t degree, const std::vector<Permutation>& generators);
bool is_primitive(std::size_t degree, const std::vector<Permutation>& generators);

/// Each generator maps every block onto a block.
bool is_block_system(const std::vector<Permutation>& generators, const BlockSystem& system);

/// Block system whose blocks are the residue classes mod b (b divides n).
BlockSystem residue_blocks(std::size_t n, std::size_t b);

inline constexpr std::size_t kMaxBruteDegree = 10;

/// All sigma in S_n with pred(sigma), in lexicographic order. The scan is split
/// by the images of 0 and 1 across threads. Throws for n > kMaxBruteDegree.
std::vector<Permutation> filter_symmetric(std::size_t n, const std::function<bool(const Permutation&)>& pred);

/// Lexicographically least sigma in S_n with pred(sigma), scanning in
/// parallel with early exit.
std::optional<Permutation> first_in_symmetric(std::size_t n, const std::function<bool(const Permutation&)>& pred);

/// N_{S_n}(G) by exhaustive scan (n <= 10). G must be enumerated.
/// Throws Error("degree too large for exhaustive normalizer") otherwise.
PermGroup normalizer_in_symmetric(const PermGroup& group);

/// N_H(G) for enumerated G and H.
PermGroup normalizer_within(const PermGroup& group, const PermGroup& ambient);

/// A Sylow p-subgroup of the enumerated ambient group containing seed, by
/// repeated normalizer ascent with the lexicographically least extension.
PermGroup sylow_ascend(const PermGroup& ambient, std::uint64_t p, const PermGroup& seed);

/// p-part of an order.
u128 p_part(u128 order, std::uint64_t p);

/// Exponent e with value = p^e, or nullopt when value is not a power of p.
std::optional<unsigned> p_exponent(u128 value, std::uint64_t p);

}  // namespace cycperm
