#pragma once

// Explicit cell pairings phi with (arm, left)(v) = (arm, leg)(phi(v)) over all
// cells of all partitions of n.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "armleg/parallel.hpp"
#include "armleg/partitions.hpp"
#include "armleg/statistics.hpp"
#include "armleg/verify_report.hpp"

namespace armleg {

/// A cell of the partition_index-th partition of n in partitions_of(n) order.
struct CellRef {
  std::size_t partition_index = 0;
  int row = 1;
  int col = 1;

  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

inline std::string to_string(const CellRef& r) {
  return "#" + std::to_string(r.partition_index) + "[" +
         std::to_string(r.row) + "," + std::to_string(r.col) + "]";
}

struct Matching {
  int n = 0;
  std::vector<std::pair<CellRef, CellRef>> pairs;  // (source, target)

  friend bool operator==(const Matching&, const Matching&) = default;
};

namespace detail {

struct KeyedCell {
  std::pair<int, int> source_key;  // (arm, left)
  std::pair<int, int> target_key;  // (arm, leg)
  CellRef ref;
};

inline std::vector<std::vector<KeyedCell>> keyed_cells(
    const std::vector<Partition>& partitions, unsigned workers) {
  std::vector<std::vector<KeyedCell>> out(partitions.size());
  parallel_for(partitions.size(), workers, [&](std::size_t k) {
    for (const auto& [cell, s] : cells(partitions[k])) {
      out[k].push_back({pair_of(s, PairFilling::arm_left),
                        pair_of(s, PairFilling::arm_leg),
                        {k, cell.row, cell.col}});
    }
  });
  return out;
}

}  // namespace detail

/// Groups sources by (arm, left) and targets by (arm, leg), each group in
/// (partition_index, row, col) order, and pairs the k-th source of a group
/// with its k-th target. Pairs are emitted in source order.
///
/// Throws std::logic_error if some group sizes differ, which would falsify
/// A_1(n) = A_2(n).
inline Matching canonical_matching(int n, unsigned workers = 1) {
  const auto partitions = all_partitions(n);
  const auto keyed = detail::keyed_cells(partitions, workers);

  // Cells arrive in canonical order, so each group is already sorted.
  std::map<std::pair<int, int>, std::vector<CellRef>> sources, targets;
  for (const auto& per_partition : keyed) {
    for (const auto& kc : per_partition) {
      sources[kc.source_key].push_back(kc.ref);
      targets[kc.target_key].push_back(kc.ref);
    }
  }

  Matching m{n, {}};
  for (const auto& [key, group] : sources) {
    const auto it = targets.find(key);
    const std::size_t available = it == targets.end() ? 0 : it->second.size();
    if (available != group.size()) {
      throw std::logic_error("canonical_matching: group " +
                             pair_label(key.first, key.second) + " has " +
                             std::to_string(group.size()) + " sources but " +
                             std::to_string(available) + " targets at n=" +
                             std::to_string(n));
    }
    for (std::size_t k = 0; k < group.size(); ++k) {
      m.pairs.emplace_back(group[k], it->second[k]);
    }
  }
  if (sources.size() != targets.size()) {
    throw std::logic_error("canonical_matching: target keys without sources at "
                           "n=" + std::to_string(n));
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

/// Checks that sources and targets each cover every cell exactly once and
/// that every pair carries (arm, left) of its source to (arm, leg) of its
/// target.
inline VerifyReport verify_matching(const Matching& m) {
  std::string context = "matching n=" + std::to_string(m.n);
  const auto partitions = all_partitions(m.n);
  std::map<CellRef, CellStats> stats;
  for (std::size_t k = 0; k < partitions.size(); ++k) {
    for (const auto& [cell, s] : cells(partitions[k])) {
      stats.emplace(CellRef{k, cell.row, cell.col}, s);
    }
  }
  const auto cell_count = static_cast<std::int64_t>(stats.size());

  std::map<CellRef, int> seen_source, seen_target;
  for (const auto& [src, dst] : m.pairs) {
    const auto s = stats.find(src);
    const auto t = stats.find(dst);
    if (s == stats.end()) {
      return VerifyReport::fail(std::move(context),
                                {"source " + to_string(src) + " is not a cell",
                                 0, 0});
    }
    if (t == stats.end()) {
      return VerifyReport::fail(std::move(context),
                                {"target " + to_string(dst) + " is not a cell",
                                 0, 0});
    }
    const auto from = pair_of(s->second, PairFilling::arm_left);
    const auto to = pair_of(t->second, PairFilling::arm_leg);
    if (from.first != to.first) {
      return VerifyReport::fail(
          std::move(context),
          {to_string(src) + " -> " + to_string(dst) + " arm", from.first,
           to.first});
    }
    if (from.second != to.second) {
      return VerifyReport::fail(
          std::move(context),
          {to_string(src) + " -> " + to_string(dst) + " left vs leg",
           from.second, to.second});
    }
    if (++seen_source[src] > 1) {
      return VerifyReport::fail(std::move(context),
                                {"source " + to_string(src) + " repeated", 1,
                                 seen_source[src]});
    }
    if (++seen_target[dst] > 1) {
      return VerifyReport::fail(std::move(context),
                                {"target " + to_string(dst) + " repeated", 1,
                                 seen_target[dst]});
    }
  }
  if (static_cast<std::int64_t>(seen_source.size()) != cell_count) {
    return VerifyReport::fail(std::move(context),
                              {"sources cover cells", cell_count,
                               static_cast<std::int64_t>(seen_source.size())});
  }
  if (static_cast<std::int64_t>(seen_target.size()) != cell_count) {
    return VerifyReport::fail(std::move(context),
                              {"targets cover cells", cell_count,
                               static_cast<std::int64_t>(seen_target.size())});
  }
  return VerifyReport::pass(std::move(context));
}

}  // namespace armleg
