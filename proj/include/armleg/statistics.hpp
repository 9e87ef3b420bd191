#pragma once

// Multisets of (arm, leg) and (arm, left) pairs over all cells of all
// partitions of n, the hook/part polynomials, and the checks that tie them to
// their generating functions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "armleg/detail/checked.hpp"
#include "armleg/errors.hpp"
#include "armleg/parallel.hpp"
#include "armleg/partitions.hpp"
#include "armleg/qseries.hpp"
#include "armleg/verify_report.hpp"

namespace armleg {

/// Which pair a cell is filled with.
enum class PairFilling {
  arm_leg,   // (a_v, l_v)
  arm_left,  // (a_v, f_v)
};

/// Which single statistic feeds the x-polynomial.
enum class CellStatistic {
  hook,  // h_v
  part,  // p_v
};

inline const char* to_string(PairFilling f) {
  return f == PairFilling::arm_leg ? "arm-leg" : "arm-left";
}

inline const char* to_string(CellStatistic s) {
  return s == CellStatistic::hook ? "hook" : "part";
}

inline std::pair<int, int> pair_of(const CellStats& s, PairFilling f) {
  return {s.arm, f == PairFilling::arm_leg ? s.leg : s.left};
}

inline std::string pair_label(int c, int d) {
  return "(c,d)=(" + std::to_string(c) + "," + std::to_string(d) + ")";
}

/// Sparse multiset of (c,d) pairs; never stores a zero count.
class PairMultiset {
 public:
  using key_type = std::pair<int, int>;
  using map_type = std::map<key_type, std::int64_t>;

  void add(int c, int d, std::int64_t count = 1) {
    if (count == 0) return;
    if (count < 0) throw usage_error("pair multiset: negative count");
    auto& slot = counts_[{c, d}];
    slot = detail::checked_add(slot, count);
    total_ = detail::checked_add(total_, count);
  }

  std::int64_t count(int c, int d) const {
    const auto it = counts_.find({c, d});
    return it == counts_.end() ? 0 : it->second;
  }

  std::int64_t total() const noexcept { return total_; }
  std::size_t distinct() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }
  const map_type& entries() const noexcept { return counts_; }

  PairMultiset& operator+=(const PairMultiset& other) {
    for (const auto& [key, count] : other.counts_) add(key.first, key.second, count);
    return *this;
  }

  friend bool operator==(const PairMultiset& a, const PairMultiset& b) {
    return a.counts_ == b.counts_;
  }

 private:
  map_type counts_;
  std::int64_t total_ = 0;
};

/// A_1(n) for arm_leg, A_2(n) for arm_left.
inline PairMultiset build_pair_multiset(int n, PairFilling filling) {
  PairMultiset ms;
  for (const auto& p : partitions_of(n)) {
    for (const auto& [cell, stats] : cells(p)) {
      const auto [c, d] = pair_of(stats, filling);
      ms.add(c, d);
    }
  }
  return ms;
}

/// build_pair_multiset for every n in [0, n_max], sharded across workers.
inline std::vector<PairMultiset> pair_multiset_table(int n_max,
                                                     PairFilling filling,
                                                     unsigned workers = 1) {
  std::vector<PairMultiset> table(static_cast<std::size_t>(n_max) + 1);
  parallel_for(table.size(), workers, [&](std::size_t n) {
    table[n] = build_pair_multiset(static_cast<int>(n), filling);
  });
  return table;
}

/// Entry-wise comparison, reporting the lexicographically first differing key.
inline VerifyReport compare_multisets(const PairMultiset& expected,
                                      const PairMultiset& actual,
                                      std::string context) {
  auto a = expected.entries().begin();
  auto b = actual.entries().begin();
  const auto a_end = expected.entries().end();
  const auto b_end = actual.entries().end();
  while (a != a_end || b != b_end) {
    if (b == b_end || (a != a_end && a->first < b->first)) {
      return VerifyReport::fail(std::move(context),
                                {pair_label(a->first.first, a->first.second),
                                 a->second, 0});
    }
    if (a == a_end || b->first < a->first) {
      return VerifyReport::fail(std::move(context),
                                {pair_label(b->first.first, b->first.second),
                                 0, b->second});
    }
    if (a->second != b->second) {
      return VerifyReport::fail(std::move(context),
                                {pair_label(a->first.first, a->first.second),
                                 a->second, b->second});
    }
    ++a;
    ++b;
  }
  return VerifyReport::pass(std::move(context));
}

/// A_1(n) = A_2(n). Expected is the arm-leg count, actual the arm-left one.
inline VerifyReport verify_theorem1(int n) {
  return compare_multisets(build_pair_multiset(n, PairFilling::arm_leg),
                           build_pair_multiset(n, PairFilling::arm_left),
                           "theorem1 n=" + std::to_string(n));
}

namespace detail {

// Runs check(n) for n in [0, n_max] and returns the lowest-n failure.
template <class Check>
VerifyReport verify_each_n(int n_max, unsigned workers, std::string context,
                           Check check) {
  std::vector<VerifyReport> reports(static_cast<std::size_t>(n_max) + 1,
                                    VerifyReport::pass(""));
  parallel_for(reports.size(), workers, [&](std::size_t n) {
    reports[n] = check(static_cast<int>(n));
  });
  return combine(std::move(context), reports);
}

}  // namespace detail

/// verify_theorem1 for every 0 <= n <= n_max.
inline VerifyReport verify_theorem1_upto(int n_max, unsigned workers = 1) {
  return detail::verify_each_n(n_max, workers,
                               "theorem1 n<=" + std::to_string(n_max),
                               verify_theorem1);
}

/// Polynomial in a marker x: exponent -> count.
class StatPolynomial {
 public:
  void add(int exponent, std::int64_t count = 1) {
    if (count == 0) return;
    auto& slot = coeffs_[exponent];
    slot = detail::checked_add(slot, count);
  }

  std::int64_t coefficient(int exponent) const {
    const auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
  }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [e, c] : coeffs_) t = detail::checked_add(t, c);
    return t;
  }

  const std::map<int, std::int64_t>& coefficients() const noexcept {
    return coeffs_;
  }

  friend bool operator==(const StatPolynomial&, const StatPolynomial&) =
      default;

 private:
  std::map<int, std::int64_t> coeffs_;
};

/// Sum over all cells of all partitions of n of x^{h_v} or x^{p_v}.
inline StatPolynomial stat_polynomial(int n, CellStatistic stat) {
  StatPolynomial poly;
  for (const auto& p : partitions_of(n)) {
    for (const auto& [cell, stats] : cells(p)) {
      poly.add(stat == CellStatistic::hook ? stats.hook : stats.p);
    }
  }
  return poly;
}

/// Sum of count * x^{c+d+1} over a pair multiset. Applied to A_1 this is the
/// hook polynomial, applied to A_2 the part polynomial.
inline StatPolynomial polynomial_from_pairs(const PairMultiset& ms) {
  StatPolynomial poly;
  for (const auto& [key, count] : ms.entries()) {
    poly.add(key.first + key.second + 1, count);
  }
  return poly;
}

inline VerifyReport compare_polynomials(const StatPolynomial& expected,
                                        const StatPolynomial& actual,
                                        std::string context) {
  std::map<int, std::pair<std::int64_t, std::int64_t>> merged;
  for (const auto& [e, c] : expected.coefficients()) merged[e].first = c;
  for (const auto& [e, c] : actual.coefficients()) merged[e].second = c;
  for (const auto& [e, pair] : merged) {
    if (pair.first != pair.second) {
      return VerifyReport::fail(std::move(context),
                                {"x^" + std::to_string(e), pair.first,
                                 pair.second});
    }
  }
  return VerifyReport::pass(std::move(context));
}

/// Hook polynomial = part polynomial, and each is recovered from its pair
/// multiset through the exponent c+d+1.
inline VerifyReport verify_identity1(int n) {
  const auto suffix = " n=" + std::to_string(n);
  const auto hook = stat_polynomial(n, CellStatistic::hook);
  const auto part = stat_polynomial(n, CellStatistic::part);
  return combine(
      "identity1" + suffix,
      {compare_polynomials(hook, part, "hook vs part"),
       compare_polynomials(
           hook, polynomial_from_pairs(build_pair_multiset(n, PairFilling::arm_leg)),
           "hook vs arm-leg pairs"),
       compare_polynomials(
           part,
           polynomial_from_pairs(build_pair_multiset(n, PairFilling::arm_left)),
           "part vs arm-left pairs")});
}

inline VerifyReport verify_identity1_upto(int n_max, unsigned workers = 1) {
  return detail::verify_each_n(n_max, workers,
                               "identity1 n<=" + std::to_string(n_max),
                               verify_identity1);
}

/// M_1(c,d)(n) or M_2(c,d)(n).
inline std::int64_t count_pair(int n, int c, int d, PairFilling filling) {
  return build_pair_multiset(n, filling).count(c, d);
}

/// Brute pair counts from a precomputed table (index = n) against the
/// coefficients of lemma_rhs(c, d, order).
inline VerifyReport verify_lemma(int c, int d, PairFilling filling,
                                 std::span<const PairMultiset> table,
                                 std::size_t order) {
  if (table.empty()) throw usage_error("verify_lemma: empty table");
  const std::size_t n_max = table.size() - 1;
  if (n_max > order) {
    throw usage_error("verify_lemma: n-max " + std::to_string(n_max) +
                      " exceeds truncation order " + std::to_string(order));
  }
  if (c < 0 || d < 0) throw usage_error("verify_lemma: negative c or d");
  const auto rhs = lemma_rhs(static_cast<std::size_t>(c),
                             static_cast<std::size_t>(d), order);
  std::string context = std::string("lemma ") + to_string(filling) + " " +
                        pair_label(c, d) + " n<=" + std::to_string(n_max) +
                        " T=" + std::to_string(order);
  std::vector<std::int64_t> counts;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto brute = table[n].count(c, d);
    counts.push_back(brute);
    if (brute != rhs[n]) {
      return VerifyReport::fail(std::move(context),
                                {"n=" + std::to_string(n), rhs[n], brute},
                                std::move(counts));
    }
  }
  return VerifyReport::pass(std::move(context), std::move(counts));
}

inline VerifyReport verify_lemma(int c, int d, PairFilling filling, int n_max,
                                 std::size_t order, unsigned workers = 1) {
  if (n_max < 0) throw usage_error("verify_lemma: negative n-max");
  if (static_cast<std::size_t>(n_max) > order) {
    throw usage_error("verify_lemma: n-max " + std::to_string(n_max) +
                      " exceeds truncation order " + std::to_string(order));
  }
  const auto table = pair_multiset_table(n_max, filling, workers);
  return verify_lemma(c, d, filling, table, order);
}

/// Box enumeration equals the Gaussian binomial, and the Gaussian binomial
/// obeys F(m,n) = q^n F(m-1,n) + F(m,n-1) with F(0,n) = F(m,0) = 1.
inline VerifyReport verify_fact3(int m, int n) {
  if (m < 0 || n < 0) throw usage_error("verify_fact3: negative box side");
  const auto rows = static_cast<std::size_t>(m);
  const auto cols = static_cast<std::size_t>(n);
  const std::size_t order = rows * cols;
  const auto context =
      "fact3 m=" + std::to_string(m) + " n=" + std::to_string(n);
  const auto box = gauss_binomial(rows, cols, order);
  std::vector<VerifyReport> parts{
      compare_series(box_gf_brute(m, n), box, "brute vs gauss")};
  if (m == 0 || n == 0) {
    parts.push_back(compare_series(qseries::one(order), box, "initial"));
  } else {
    const auto recurrence = gauss_binomial(rows - 1, cols, order).shifted(cols) +
                            gauss_binomial(rows, cols - 1, order);
    parts.push_back(compare_series(recurrence, box, "recurrence"));
  }
  return combine(context, parts);
}

/// Partitions with parts <= m are counted by 1/(q)_m, and by conjugation so
/// are partitions with at most m parts.
inline VerifyReport verify_fact4(int m, std::size_t order) {
  if (m < 0) throw usage_error("verify_fact4: negative m");
  const auto gf = invert(q_pochhammer(1, static_cast<std::size_t>(m), order));
  std::string context =
      "fact4 m=" + std::to_string(m) + " T=" + std::to_string(order);
  std::vector<std::int64_t> counts;
  for (std::size_t n = 0; n <= order; ++n) {
    std::int64_t bounded_parts = 0;
    std::int64_t bounded_length = 0;
    for (const auto& p : partitions_of(static_cast<int>(n))) {
      if (p.empty() || p.parts().front() <= m) ++bounded_parts;
      if (p.length() <= m) ++bounded_length;
    }
    counts.push_back(bounded_parts);
    const auto where = "n=" + std::to_string(n);
    if (bounded_parts != gf[n]) {
      return VerifyReport::fail(std::move(context),
                                {where, gf[n], bounded_parts}, std::move(counts));
    }
    if (bounded_length != bounded_parts) {
      return VerifyReport::fail(std::move(context),
                                {where + " conjugation", bounded_parts,
                                 bounded_length},
                                std::move(counts));
    }
  }
  return VerifyReport::pass(std::move(context), std::move(counts));
}

}  // namespace armleg
