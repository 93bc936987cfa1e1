#pragma once

#include <random>
#include <vector>

#include "cycperm/cyclic_code.hpp"
#include "cycperm/field.hpp"
#include "cycperm/permutation.hpp"

namespace testing {

inline std::vector<cycperm::CyclicCode> all_codes(std::uint32_t q, std::uint32_t n) {
  auto f = cycperm::make_field_of_order(q);
  std::vector<cycperm::CyclicCode> out;
  for (auto& spec : cycperm::enumerate_cyclic_codes(f, n)) {
    auto code = cycperm::to_linear_code(spec);
    out.push_back({std::move(spec), std::move(code)});
  }
  return out;
}

inline cycperm::Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<cycperm::Permutation::Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<cycperm::Permutation::Point>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
  return cycperm::Permutation(v);
}

}  // namespace testing
