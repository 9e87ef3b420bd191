#pragma once

// Hook-marked Ferrers diagrams. A diagram with a marked hook of arm c and leg
// d whose corner sits at cell [i+1, j+1] splits into seven regions, each with
// its own generating function. Summing the product over all corners, and
// then simplifying with the q-binomial theorem, gives lemma_rhs(c, d).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "armleg/errors.hpp"
#include "armleg/parallel.hpp"
#include "armleg/partitions.hpp"
#include "armleg/qseries.hpp"
#include "armleg/statistics.hpp"
#include "armleg/verify_report.hpp"

namespace armleg {

/// Target arm c, target leg d, and the corner offset: i rows above it and j
/// columns to its left.
struct AnatomyParams {
  int c = 0;
  int d = 0;
  int i = 0;
  int j = 0;

  friend bool operator==(const AnatomyParams&, const AnatomyParams&) = default;
};

/// Generating functions of the seven regions, in the order they are usually
/// drawn.
struct AnatomyFactors {
  qseries corner_rectangle;  // 1. full i x j block up-left of the corner
  qseries above_arm;         // 2. full i x (c+1) block over the arm
  qseries left_of_leg;       // 3. full (d+1) x j block beside the leg
  qseries above_right;       // 4. <= i rows right of block 2
  qseries below_left;        // 5. <= j columns under block 3
  qseries hook;              // 6. the marked hook, c+d+1 cells
  qseries inside_hook;       // 7. fits in the d x c box under the arm

  qseries product() const {
    return corner_rectangle * above_arm * left_of_leg * above_right *
           below_left * hook * inside_hook;
  }
};

namespace detail {

inline void require_nonnegative(const AnatomyParams& p) {
  if (p.c < 0 || p.d < 0 || p.i < 0 || p.j < 0) {
    throw usage_error("anatomy: parameters must be nonnegative");
  }
}

inline std::size_t as_size(int v) { return static_cast<std::size_t>(v); }

}  // namespace detail

/// Smallest diagram weight a corner can carry: hook plus the three full
/// rectangles.
inline std::size_t anatomy_min_degree(const AnatomyParams& p) {
  detail::require_nonnegative(p);
  const auto c = detail::as_size(p.c), d = detail::as_size(p.d);
  const auto i = detail::as_size(p.i), j = detail::as_size(p.j);
  return c + d + 1 + i * j + i * (c + 1) + j * (d + 1);
}

inline AnatomyFactors anatomy_factors(const AnatomyParams& p,
                                      std::size_t order) {
  detail::require_nonnegative(p);
  const auto c = detail::as_size(p.c), d = detail::as_size(p.d);
  const auto i = detail::as_size(p.i), j = detail::as_size(p.j);
  return AnatomyFactors{
      make_monomial(i * j, order),
      make_monomial((c + 1) * i, order),
      make_monomial((d + 1) * j, order),
      invert(q_pochhammer(1, i, order)),
      invert(q_pochhammer(1, j, order)),
      make_monomial(c + d + 1, order),
      gauss_binomial(c, d, order),
  };
}

inline qseries anatomy_gf(const AnatomyParams& p, std::size_t order) {
  return anatomy_factors(p, order).product();
}

namespace detail {

inline std::int64_t corner_count_in(const std::vector<Partition>& partitions,
                                    const AnatomyParams& p) {
  const Cell corner{p.i + 1, p.j + 1};
  std::int64_t count = 0;
  for (const auto& lambda : partitions) {
    if (!contains(lambda, corner)) continue;
    const auto s = cell_stats(lambda, corner);
    if (s.arm == p.c && s.leg == p.d) ++count;
  }
  return count;
}

}  // namespace detail

/// Number of partitions of n whose cell [i+1, j+1] exists with arm exactly c
/// and leg exactly d.
inline std::int64_t corner_count_brute(const AnatomyParams& p, int n) {
  detail::require_nonnegative(p);
  return detail::corner_count_in(all_partitions(n), p);
}

/// (a) each corner's series matches its brute count for all n <= n_max, and
/// (b) the corner sums reproduce M_1(c,d)(n).
inline VerifyReport verify_anatomy(int c, int d, int n_max, std::size_t order,
                                   unsigned workers = 1) {
  if (c < 0 || d < 0 || n_max < 0) {
    throw usage_error("verify_anatomy: parameters must be nonnegative");
  }
  if (static_cast<std::size_t>(n_max) > order) {
    throw usage_error("verify_anatomy: n-max " + std::to_string(n_max) +
                      " exceeds truncation order " + std::to_string(order));
  }
  const auto limit = static_cast<std::size_t>(n_max);
  std::string context = "anatomy " + pair_label(c, d) +
                        " n<=" + std::to_string(n_max) +
                        " T=" + std::to_string(order);

  std::vector<std::vector<Partition>> by_weight(limit + 1);
  for (std::size_t n = 0; n <= limit; ++n) {
    by_weight[n] = all_partitions(static_cast<int>(n));
  }

  std::vector<AnatomyParams> corners;
  for (int i = 0;; ++i) {
    if (anatomy_min_degree({c, d, i, 0}) > limit) break;
    for (int j = 0; anatomy_min_degree({c, d, i, j}) <= limit; ++j) {
      corners.push_back({c, d, i, j});
    }
  }

  std::vector<VerifyReport> per_corner(corners.size(), VerifyReport::pass(""));
  std::vector<qseries> series(corners.size(), qseries(order));
  parallel_for(corners.size(), workers, [&](std::size_t k) {
    const auto& p = corners[k];
    series[k] = anatomy_gf(p, order);
    const auto label = "corner i=" + std::to_string(p.i) +
                       " j=" + std::to_string(p.j);
    for (std::size_t n = 0; n <= limit; ++n) {
      const auto brute = detail::corner_count_in(by_weight[n], p);
      if (brute != series[k][n]) {
        per_corner[k] = VerifyReport::fail(
            label, {"n=" + std::to_string(n), series[k][n], brute});
        return;
      }
    }
  });
  if (auto r = combine(context, per_corner); !r.passed()) return r;

  std::vector<std::int64_t> sums(limit + 1, 0);
  for (const auto& s : series) {
    for (std::size_t n = 0; n <= limit; ++n) sums[n] += s[n];
  }
  for (std::size_t n = 0; n <= limit; ++n) {
    const auto m1 = count_pair(static_cast<int>(n), c, d, PairFilling::arm_leg);
    if (const auto sum = sums[n]; sum != m1) {
      return VerifyReport::fail(std::move(context),
                                {"corner sum n=" + std::to_string(n), m1, sum},
                                std::move(sums));
    }
  }
  return VerifyReport::pass(std::move(context), std::move(sums));
}

// The five stages of the simplification, each evaluated from its own
// formula. Sums keep a term iff its lowest q-degree fits the order.

/// E0: the double sum over all corners,
///   [c+d choose c]_q q^{c+d+1} sum_{i,j} q^{ij+i(c+1)+j(d+1)} / ((q)_i (q)_j).
inline qseries chain_double_sum(std::size_t c, std::size_t d,
                                std::size_t order) {
  const std::size_t base = c + d + 1;
  qseries sum(order);
  for (std::size_t i = 0; base + i * (c + 1) <= order; ++i) {
    const auto inv_i = invert(q_pochhammer(1, i, order));
    for (std::size_t j = 0; base + i * j + i * (c + 1) + j * (d + 1) <= order;
         ++j) {
      sum += make_monomial(i * j + i * (c + 1) + j * (d + 1), order) * inv_i *
             invert(q_pochhammer(1, j, order));
    }
  }
  return gauss_binomial(c, d, order) * make_monomial(base, order) * sum;
}

/// E1: the inner j-sum collapsed by the a = infinity case at z = q^{d+i+1},
///   [c+d choose c]_q q^{c+d+1} sum_i q^{i(c+1)} / ((q)_i (q^{d+i+1})_inf).
inline qseries chain_after_fact2(std::size_t c, std::size_t d,
                                 std::size_t order) {
  const std::size_t base = c + d + 1;
  qseries sum(order);
  for (std::size_t i = 0; base + i * (c + 1) <= order; ++i) {
    sum += make_monomial(i * (c + 1), order) *
           invert(q_pochhammer(1, i, order)) *
           invert(q_pochhammer(d + i + 1, infinity, order));
  }
  return gauss_binomial(c, d, order) * make_monomial(base, order) * sum;
}

/// E2: 1/(q)_inf pulled out front,
///   q^{c+d+1}/(q)_inf (q)_{c+d}/(q)_c sum_i q^{i(c+1)} (q)_{i+d}/((q)_d (q)_i).
inline qseries chain_single_sum(std::size_t c, std::size_t d,
                                std::size_t order) {
  const std::size_t base = c + d + 1;
  const auto inv_d = invert(q_pochhammer(1, d, order));
  qseries sum(order);
  for (std::size_t i = 0; base + i * (c + 1) <= order; ++i) {
    sum += make_monomial(i * (c + 1), order) * q_pochhammer(1, i + d, order) *
           inv_d * invert(q_pochhammer(1, i, order));
  }
  return make_monomial(base, order) * euler_inv(order) *
         q_pochhammer(1, c + d, order) * invert(q_pochhammer(1, c, order)) *
         sum;
}

/// E3: the i-sum closed by the q-binomial theorem at z = q^{c+1},
///   q^{c+d+1}/(q)_inf (q)_{c+d}/(q)_c 1/(q^{c+1})_{d+1}.
inline qseries chain_after_fact1(std::size_t c, std::size_t d,
                                 std::size_t order) {
  return make_monomial(c + d + 1, order) * euler_inv(order) *
         q_pochhammer(1, c + d, order) * invert(q_pochhammer(1, c, order)) *
         invert(q_pochhammer(c + 1, d + 1, order));
}

/// E4: q^{c+d+1} / ((q)_inf (1 - q^{c+d+1})), inverted as one product.
inline qseries chain_closed_form(std::size_t c, std::size_t d,
                                 std::size_t order) {
  return make_monomial(c + d + 1, order) *
         invert(q_pochhammer(1, infinity, order) *
                q_pochhammer(c + d + 1, 1, order));
}

/// E0 = E1 = E2 = E3 = E4 = lemma_rhs(c, d), each step compared separately.
inline VerifyReport proof_chain(int c, int d, std::size_t order) {
  if (c < 0 || d < 0) throw usage_error("proof_chain: negative c or d");
  const auto cc = static_cast<std::size_t>(c);
  const auto dd = static_cast<std::size_t>(d);
  const qseries stages[] = {
      chain_double_sum(cc, dd, order),  chain_after_fact2(cc, dd, order),
      chain_single_sum(cc, dd, order),  chain_after_fact1(cc, dd, order),
      chain_closed_form(cc, dd, order), lemma_rhs(cc, dd, order),
  };
  const char* names[] = {"E0", "E1", "E2", "E3", "E4", "lemma_rhs"};
  std::vector<VerifyReport> steps;
  for (std::size_t k = 0; k + 1 < std::size(stages); ++k) {
    steps.push_back(compare_series(stages[k], stages[k + 1],
                                   std::string(names[k]) + " = " +
                                       names[k + 1]));
  }
  return combine("chain " + pair_label(c, d) + " T=" + std::to_string(order),
                 steps);
}

}  // namespace armleg
