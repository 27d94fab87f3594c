#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "euler2/rational.hpp"

namespace euler2 {

// Row n of the second-order Eulerian triangle: entries C(n,1)..C(n,n).
// C(n,k) counts the Stirling permutations of order n with k descents, where
// the statistic uses a trailing sentinel 0 so the final position always
// descends. That convention is the one consistent with C(1,1) = 1, C(1,0) = 0.
struct EulerianRow {
  int n = 0;
  std::vector<Int> entries;

  Int c(int k) const {
    if (k < 1 || k > n) return Int{0};
    return entries[static_cast<std::size_t>(k - 1)];
  }

  friend bool operator==(const EulerianRow&, const EulerianRow&) = default;
};

/// Row n by the recurrence C(n,k) = k*C(n-1,k) + (2n-k)*C(n-1,k-1).
/// The triangle starts at n = 1.
inline EulerianRow eulerian_row(int n) {
  if (n < 1) throw std::domain_error("eulerian_row: the triangle starts at n = 1");
  thread_local std::vector<std::vector<Int>> rows;  // rows[i] holds row i+1
  while (static_cast<int>(rows.size()) < n) {
    const int m = static_cast<int>(rows.size()) + 1;
    if (m == 1) {
      rows.push_back({Int{1}});
      continue;
    }
    const auto& prev = rows.back();
    const auto prev_at = [&](int k) {
      return (k < 1 || k > m - 1) ? Int{0} : prev[static_cast<std::size_t>(k - 1)];
    };
    std::vector<Int> row(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k)
      row[k - 1] = Int{k} * prev_at(k) + Int{2 * m - k} * prev_at(k - 1);
    rows.push_back(std::move(row));
  }
  return EulerianRow{n, rows[static_cast<std::size_t>(n - 1)]};
}

// A Stirling permutation of order n is a word over {1,1,2,2,...,n,n} in which
// everything lying between the two copies of m is greater than m.
using StirlingPermutation = std::vector<int>;

inline bool is_stirling_permutation(const StirlingPermutation& word) {
  if (word.empty() || word.size() % 2 != 0) return false;
  const int n = static_cast<int>(word.size() / 2);
  std::vector<int> first(n + 1, -1), second(n + 1, -1);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int v = word[i];
    if (v < 1 || v > n) return false;
    if (first[v] < 0)
      first[v] = static_cast<int>(i);
    else if (second[v] < 0)
      second[v] = static_cast<int>(i);
    else
      return false;
  }
  for (int m = 1; m <= n; ++m) {
    for (int i = first[m] + 1; i < second[m]; ++i)
      if (word[i] < m) return false;
  }
  return true;
}

namespace detail {

inline int descent_count_unchecked(std::span<const int> word) {
  int descents = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int next = i + 1 < word.size() ? word[i + 1] : 0;  // trailing sentinel
    if (word[i] > next) ++descents;
  }
  return descents;
}

}  // namespace detail

/// Number of positions with a_i > a_{i+1}, counting the final position
/// against the sentinel 0.
inline int descent_count(const StirlingPermutation& word) {
  if (!is_stirling_permutation(word))
    throw std::invalid_argument("descent_count: not a Stirling permutation");
  return detail::descent_count_unchecked(std::span<const int>(word));
}

// The enumerator grows order m-1 words to order m by inserting the adjacent
// pair "mm" into each of the 2m-1 gaps; the pair insertion cannot break the
// betweenness condition, and every order-m word arises exactly once, giving
// the (2n-1)!! total. The cap guards the factorial-type growth.
inline constexpr int kDefaultEnumerationCap = 8;

template <typename Visitor>
void for_each_stirling_permutation(int n, Visitor&& visit,
                                   int enumeration_cap = kDefaultEnumerationCap) {
  if (n < 1) throw std::domain_error("stirling permutations: order must be >= 1");
  if (n > enumeration_cap)
    throw std::length_error("stirling permutations: order exceeds the enumeration cap");
  std::vector<int> word{1, 1};
  word.reserve(2 * static_cast<std::size_t>(n));
  const auto insert_level = [&](auto&& self, int m) -> void {
    if (m > n) {
      visit(std::span<const int>(word));
      return;
    }
    // Descending gap order keeps the n = 2 stream in ascending word order.
    for (int gap = 2 * (m - 1); gap >= 0; --gap) {
      word.insert(word.begin() + gap, 2, m);
      self(self, m + 1);
      word.erase(word.begin() + gap, word.begin() + gap + 2);
    }
  };
  insert_level(insert_level, 2);
}

inline std::vector<StirlingPermutation> enumerate_stirling_permutations(
    int n, int enumeration_cap = kDefaultEnumerationCap) {
  std::vector<StirlingPermutation> out;
  for_each_stirling_permutation(
      n, [&](std::span<const int> word) { out.emplace_back(word.begin(), word.end()); },
      enumeration_cap);
  return out;
}

/// Histogram of the descent statistic over all Stirling permutations of
/// order n — the combinatorial ground truth for eulerian_row.
inline EulerianRow descent_histogram(int n, int enumeration_cap = kDefaultEnumerationCap) {
  std::vector<long long> counts(static_cast<std::size_t>(n), 0);
  for_each_stirling_permutation(
      n,
      [&](std::span<const int> word) {
        const int d = detail::descent_count_unchecked(word);
        ++counts[static_cast<std::size_t>(d - 1)];
      },
      enumeration_cap);
  EulerianRow row{n, {}};
  row.entries.reserve(counts.size());
  for (const long long c : counts) row.entries.emplace_back(c);
  return row;
}

}  // namespace euler2
