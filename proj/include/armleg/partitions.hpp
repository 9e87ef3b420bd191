#pragma once

// Integer partitions, Ferrers-diagram cells and the five per-cell statistics.
// Rows and columns are 1-based: cell [i,j] is row i, column j.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "armleg/detail/checked.hpp"
#include "armleg/errors.hpp"
#include "armleg/qseries.hpp"

namespace armleg {

/// Weakly decreasing sequence of positive parts. The empty partition is the
/// unique partition of 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
        throw usage_error("partition: parts must be positive and weakly "
                          "decreasing");
      }
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// lambda_i, 1-based; 0 past the last row.
  int row_length(int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[i - 1] : 0;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (std::size_t i = 0; i < p.parts_.size(); ++i) {
      if (i) os << ',';
      os << p.parts_[i];
    }
    return os << ')';
  }

 private:
  friend class PartitionIterator;
  std::vector<int> parts_;
  int weight_ = 0;
};

struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellStats {
  int arm = 0;
  int leg = 0;
  int left = 0;
  int hook = 1;
  int p = 1;

  friend bool operator==(const CellStats&, const CellStats&) = default;
};

/// Transposed diagram: lambda'_j is the number of parts >= j.
inline Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> cols(p.parts().front(), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

inline bool contains(const Partition& p, Cell v) {
  return v.row >= 1 && v.row <= p.length() && v.col >= 1 &&
         v.col <= p.row_length(v.row);
}

namespace detail {

inline CellStats stats_with_conjugate(const Partition& p, const Partition& pc,
                                      Cell v) {
  CellStats s;
  s.arm = p.row_length(v.row) - v.col;
  s.leg = pc.row_length(v.col) - v.row;
  s.left = v.col - 1;
  s.hook = s.arm + s.leg + 1;
  s.p = s.arm + s.left + 1;
  return s;
}

}  // namespace detail

inline CellStats cell_stats(const Partition& p, Cell v) {
  if (!contains(p, v)) {
    throw usage_error("cell_stats: cell [" + std::to_string(v.row) + "," +
                      std::to_string(v.col) + "] lies outside the partition");
  }
  return detail::stats_with_conjugate(p, conjugate(p), v);
}

/// All cells in row-major order with their statistics.
inline std::vector<std::pair<Cell, CellStats>> cells(const Partition& p) {
  std::vector<std::pair<Cell, CellStats>> out;
  out.reserve(static_cast<std::size_t>(p.weight()));
  const Partition pc = conjugate(p);
  for (int i = 1; i <= p.length(); ++i) {
    for (int j = 1; j <= p.row_length(i); ++j) {
      out.emplace_back(Cell{i, j}, detail::stats_with_conjugate(p, pc, {i, j}));
    }
  }
  return out;
}

/// Walks the partitions of n in descending lexicographic order, starting at
/// (n) and ending at (1,...,1).
class PartitionIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = Partition;
  using difference_type = std::ptrdiff_t;
  using pointer = const Partition*;
  using reference = const Partition&;

  PartitionIterator() = default;  // end sentinel

  explicit PartitionIterator(int n) : done_(false) {
    if (n < 0) throw usage_error("partitions_of: n must be nonnegative");
    if (n > 0) current_ = Partition({n});
  }

  reference operator*() const noexcept { return current_; }
  pointer operator->() const noexcept { return &current_; }

  PartitionIterator& operator++() {
    advance();
    return *this;
  }
  void operator++(int) { advance(); }

  friend bool operator==(const PartitionIterator& a,
                         const PartitionIterator& b) {
    return a.done_ == b.done_;
  }

 private:
  void advance() {
    auto& parts = current_.parts_;
    // Rightmost part larger than 1; everything after it is a 1.
    std::size_t i = parts.size();
    while (i > 0 && parts[i - 1] == 1) --i;
    if (i == 0) {
      done_ = true;
      return;
    }
    const int v = parts[i - 1] - 1;
    int remaining = static_cast<int>(parts.size() - i) + 1;
    parts[i - 1] = v;
    parts.resize(i);
    while (remaining > 0) {
      const int take = remaining < v ? remaining : v;
      parts.push_back(take);
      remaining -= take;
    }
  }

  Partition current_;
  bool done_ = true;
};

class PartitionRange {
 public:
  explicit PartitionRange(int n) : n_(n) {}
  PartitionIterator begin() const { return PartitionIterator(n_); }
  PartitionIterator end() const { return {}; }

 private:
  int n_;
};

/// Lazily enumerates every partition of n exactly once, in descending
/// lexicographic order.
inline PartitionRange partitions_of(int n) { return PartitionRange(n); }

inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  for (const auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

/// p(n) from the bounded-part recurrence p(n,k) = p(n,k-1) + p(n-k,k).
/// Uses neither enumeration nor series arithmetic.
inline std::int64_t count_partitions(int n) {
  if (n < 0) return 0;
  // ways[m] = number of partitions of m with parts <= k, for increasing k.
  std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int m = k; m <= n; ++m) {
      ways[m] = detail::checked_add(ways[m], ways[m - k]);
    }
  }
  return ways[n];
}

namespace detail {

// Places rows top-down: `rows_left` more rows, each at most `max_part`.
inline void count_box_diagrams(int rows_left, int max_part, std::size_t weight,
                               std::vector<std::int64_t>& counts) {
  ++counts[weight];
  if (rows_left == 0) return;
  for (int part = 1; part <= max_part; ++part) {
    count_box_diagrams(rows_left - 1, part, weight + part, counts);
  }
}

}  // namespace detail

/// Generating function of Ferrers diagrams with at most m rows and at most n
/// columns, by direct enumeration. Order m*n.
inline qseries box_gf_brute(int m, int n) {
  if (m < 0 || n < 0) throw usage_error("box_gf_brute: negative box side");
  const auto order = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
  std::vector<std::int64_t> counts(order + 1, 0);
  detail::count_box_diagrams(m, n, 0, counts);
  return qseries(order, std::move(counts));
}

}  // namespace armleg
