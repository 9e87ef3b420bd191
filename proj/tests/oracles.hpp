#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into armleg; the point is to have a second route to every number.

#include <cstdint>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;  // untruncated, index = exponent

/// Partitions of n with largest part <= max_part, by recursion on the first
/// part, largest first. Produces descending lexicographic order.
inline void partitions_rec(int n, int max_part, std::vector<int>& prefix,
                           std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = n < max_part ? n : max_part; k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

/// Ferrers diagram as a boolean grid, rows x cols big enough to hold it.
struct Diagram {
  std::vector<std::vector<bool>> cells;

  explicit Diagram(const std::vector<int>& parts) {
    const int width = parts.empty() ? 0 : parts.front();
    for (int len : parts) {
      std::vector<bool> row(width, false);
      for (int j = 0; j < len; ++j) row[j] = true;
      cells.push_back(row);
    }
  }

  bool at(int r, int c) const {  // 0-based
    return r >= 0 && r < static_cast<int>(cells.size()) && c >= 0 &&
           c < static_cast<int>(cells[r].size()) && cells[r][c];
  }

  // 1-based cell, counted by walking the grid.
  int right_of(int i, int j) const {
    int n = 0;
    for (int c = j; at(i - 1, c); ++c) ++n;
    return n;
  }
  int below(int i, int j) const {
    int n = 0;
    for (int r = i; at(r, j - 1); ++r) ++n;
    return n;
  }
  int left_of(int i, int j) const {
    int n = 0;
    for (int c = j - 2; c >= 0; --c) n += at(i - 1, c) ? 1 : 0;
    return n;
  }
};

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// 1 - q^k as a polynomial.
inline Poly one_minus(int k) {
  Poly p(k + 1, 0);
  p[0] = 1;
  p[k] -= 1;
  return p;
}

/// (q)_a = (1-q)...(1-q^a), untruncated.
inline Poly q_factorial(int a) {
  Poly p{1};
  for (int k = 1; k <= a; ++k) p = mul(p, one_minus(k));
  return p;
}

/// Exact polynomial division num / den where den[0] = 1 and the quotient is a
/// polynomial.
inline Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t qlen = num.size() - den.size() + 1;
  Poly q(qlen, 0);
  for (std::size_t e = 0; e < qlen; ++e) {
    q[e] = num[e];
    for (std::size_t k = 0; k < den.size(); ++k) num[e + k] -= q[e] * den[k];
  }
  return q;
}

/// Closed form (q)_{m+n} / ((q)_m (q)_n).
inline Poly gauss_closed_form(int m, int n) {
  return divide_exact(q_factorial(m + n), mul(q_factorial(m), q_factorial(n)));
}

/// First `len` coefficients of p, zero-padded.
inline Poly head(const Poly& p, std::size_t len) {
  Poly r(len, 0);
  for (std::size_t e = 0; e < len && e < p.size(); ++e) r[e] = p[e];
  return r;
}

/// Number of partitions of n with parts <= m and at most rows parts, by
/// direct enumeration.
inline std::int64_t bounded_count(int n, int max_part, int max_rows) {
  std::int64_t count = 0;
  for (const auto& p : partitions(n)) {
    if (static_cast<int>(p.size()) <= max_rows &&
        (p.empty() || p.front() <= max_part)) {
      ++count;
    }
  }
  return count;
}

}  // namespace oracle
