#pragma once

// Truncated formal power series in q with exact integer coefficients.
//
// A series of order T keeps the coefficients of q^0 .. q^T. Every constructor
// and every product truncates eagerly, so all retained coefficients are
// exact. Binary operations require equal orders; use truncated() to lower
// one side explicitly.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "armleg/detail/checked.hpp"
#include "armleg/errors.hpp"
#include "armleg/verify_report.hpp"

namespace armleg {

template <class Int>
class basic_qseries {
 public:
  using coefficient_type = Int;

  /// The zero series of the given order.
  explicit basic_qseries(std::size_t order) : coeffs_(order + 1, Int{0}) {}

  /// Takes ownership of `coeffs`, which must hold exactly order + 1 entries.
  basic_qseries(std::size_t order, std::vector<Int> coeffs)
      : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1) {
      throw usage_error("qseries: coefficient count must be order + 1");
    }
  }

  static basic_qseries zero(std::size_t order) { return basic_qseries(order); }

  static basic_qseries one(std::size_t order) {
    basic_qseries s(order);
    s.coeffs_[0] = Int{1};
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  std::span<const Int> coefficients() const noexcept { return coeffs_; }

  /// Unchecked access; e must be <= order().
  const Int& operator[](std::size_t e) const noexcept { return coeffs_[e]; }
  Int& operator[](std::size_t e) noexcept { return coeffs_[e]; }

  /// Checked access.
  const Int& at(std::size_t e) const {
    if (e > order()) {
      throw usage_error("qseries: exponent " + std::to_string(e) +
                        " exceeds order " + std::to_string(order()));
    }
    return coeffs_[e];
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Int& c) { return c == Int{0}; });
  }

  /// Drops every coefficient above `new_order`.
  basic_qseries truncated(std::size_t new_order) const {
    if (new_order > order()) {
      throw usage_error("qseries: cannot truncate to a higher order");
    }
    return basic_qseries(
        new_order, std::vector<Int>(coeffs_.begin(),
                                    coeffs_.begin() + new_order + 1));
  }

  /// Multiplication by q^k.
  basic_qseries shifted(std::size_t k) const {
    basic_qseries r(order());
    for (std::size_t e = 0; e + k <= order(); ++e) r.coeffs_[e + k] = coeffs_[e];
    return r;
  }

  basic_qseries& operator+=(const basic_qseries& b) {
    require_same_order(b);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
      coeffs_[e] = detail::checked_add(coeffs_[e], b.coeffs_[e]);
    }
    return *this;
  }

  basic_qseries& operator-=(const basic_qseries& b) {
    require_same_order(b);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
      coeffs_[e] = detail::checked_sub(coeffs_[e], b.coeffs_[e]);
    }
    return *this;
  }

  basic_qseries& operator*=(const basic_qseries& b) {
    *this = *this * b;
    return *this;
  }

  friend basic_qseries operator+(basic_qseries a, const basic_qseries& b) {
    a += b;
    return a;
  }

  friend basic_qseries operator-(basic_qseries a, const basic_qseries& b) {
    a -= b;
    return a;
  }

  friend basic_qseries operator-(const basic_qseries& a) {
    return basic_qseries::zero(a.order()) - a;
  }

  /// Cauchy product truncated at the shared order.
  friend basic_qseries operator*(const basic_qseries& a,
                                 const basic_qseries& b) {
    a.require_same_order(b);
    const std::size_t order = a.order();
    basic_qseries r(order);
    for (std::size_t i = 0; i <= order; ++i) {
      if (a.coeffs_[i] == Int{0}) continue;
      for (std::size_t j = 0; i + j <= order; ++j) {
        if (b.coeffs_[j] == Int{0}) continue;
        r.coeffs_[i + j] = detail::checked_add(
            r.coeffs_[i + j], detail::checked_mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return r;
  }

  friend bool operator==(const basic_qseries&, const basic_qseries&) = default;

  friend std::ostream& operator<<(std::ostream& os, const basic_qseries& s) {
    os << '[';
    for (std::size_t e = 0; e < s.coeffs_.size(); ++e) {
      if (e) os << ',';
      os << s.coeffs_[e];
    }
    return os << ']';
  }

 private:
  void require_same_order(const basic_qseries& b) const {
    if (order() != b.order()) {
      throw usage_error("qseries: order mismatch (" + std::to_string(order()) +
                        " vs " + std::to_string(b.order()) + ")");
    }
  }

  std::vector<Int> coeffs_;
};

using qseries = basic_qseries<std::int64_t>;

/// Tag for the infinite q-Pochhammer product.
struct infinity_t {
  explicit constexpr infinity_t() = default;
};
inline constexpr infinity_t infinity{};

/// q^e at order T; the zero series when e > T.
template <class Int = std::int64_t>
basic_qseries<Int> make_monomial(std::size_t e, std::size_t order) {
  basic_qseries<Int> s(order);
  if (e <= order) s[e] = Int{1};
  return s;
}

template <class Int>
const Int& coefficient(const basic_qseries<Int>& s, std::size_t e) {
  return s.at(e);
}

/// Multiplicative inverse; the constant term must be 1.
template <class Int>
basic_qseries<Int> invert(const basic_qseries<Int>& a) {
  if (a[0] != Int{1}) {
    throw std::domain_error("qseries: invert needs constant term 1");
  }
  const std::size_t order = a.order();
  basic_qseries<Int> b(order);
  b[0] = Int{1};
  // b_n = -sum_{k=1}^{n} a_k b_{n-k}
  for (std::size_t n = 1; n <= order; ++n) {
    Int acc{0};
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] == Int{0}) continue;
      acc = detail::checked_add(acc, detail::checked_mul(a[k], b[n - k]));
    }
    b[n] = detail::checked_sub(Int{0}, acc);
  }
  return b;
}

namespace detail {

// s *= (1 - q^k), in place.
template <class Int>
void multiply_by_one_minus_power(basic_qseries<Int>& s, std::size_t k) {
  for (std::size_t e = s.order() + 1; e-- > k;) {
    s[e] = checked_sub(s[e], s[e - k]);
  }
}

inline void require_positive_base(std::size_t k) {
  if (k == 0) {
    throw std::domain_error(
        "qseries: specialisation z = q^0 diverges; base exponent must be >= 1");
  }
}

}  // namespace detail

/// (q^k; q)_a = (1 - q^k)(1 - q^{k+1}) ... (1 - q^{k+a-1}), truncated.
template <class Int = std::int64_t>
basic_qseries<Int> q_pochhammer(std::size_t k, std::size_t terms,
                                std::size_t order) {
  detail::require_positive_base(k);
  auto s = basic_qseries<Int>::one(order);
  for (std::size_t t = 0; t < terms && k + t <= order; ++t) {
    detail::multiply_by_one_minus_power(s, k + t);
  }
  return s;
}

/// (q^k; q)_inf, keeping every factor whose q-degree fits the order.
template <class Int = std::int64_t>
basic_qseries<Int> q_pochhammer(std::size_t k, infinity_t, std::size_t order) {
  detail::require_positive_base(k);
  auto s = basic_qseries<Int>::one(order);
  for (std::size_t e = k; e <= order; ++e) {
    detail::multiply_by_one_minus_power(s, e);
  }
  return s;
}

/// 1/(q)_inf; the coefficient of q^n is the number of partitions of n.
template <class Int = std::int64_t>
basic_qseries<Int> euler_inv(std::size_t order) {
  return invert(q_pochhammer<Int>(1, infinity, order));
}

/// Gaussian binomial (q)_{m+n} / ((q)_m (q)_n): the generating function of
/// Ferrers diagrams inside an m-row, n-column box.
///
/// Built from F(m,n) = q^n F(m-1,n) + F(m,n-1) with F(0,n) = F(m,0) = 1. The
/// table of smaller boxes is local to the call, so concurrent callers share
/// nothing.
template <class Int = std::int64_t>
basic_qseries<Int> gauss_binomial(std::size_t m, std::size_t n,
                                  std::size_t order) {
  const auto one = basic_qseries<Int>::one(order);
  std::vector<basic_qseries<Int>> row(n + 1, one);  // F(0, .)
  for (std::size_t r = 1; r <= m; ++r) {
    std::vector<basic_qseries<Int>> next;
    next.reserve(n + 1);
    next.push_back(one);  // F(r, 0)
    for (std::size_t c = 1; c <= n; ++c) {
      next.push_back(row[c].shifted(c) + next[c - 1]);
    }
    row = std::move(next);
  }
  return row[n];
}

/// q^{c+d+1} / (1 - q^{c+d+1}) * 1/(q)_inf, the generating function of the
/// number of times the pair (c,d) occurs among all cells of all partitions.
template <class Int = std::int64_t>
basic_qseries<Int> lemma_rhs(std::size_t c, std::size_t d, std::size_t order) {
  const std::size_t s = c + d + 1;
  if (s > order) return basic_qseries<Int>::zero(order);
  return make_monomial<Int>(s, order) *
         invert(q_pochhammer<Int>(s, 1, order)) * euler_inv<Int>(order);
}

/// Coefficient-wise comparison; reports the lowest differing exponent.
inline VerifyReport compare_series(const qseries& expected,
                                   const qseries& actual, std::string context) {
  if (expected.order() != actual.order()) {
    return VerifyReport::fail(
        std::move(context),
        {"order", static_cast<std::int64_t>(expected.order()),
         static_cast<std::int64_t>(actual.order())});
  }
  for (std::size_t e = 0; e <= expected.order(); ++e) {
    if (expected[e] != actual[e]) {
      return VerifyReport::fail(std::move(context),
                                {"q^" + std::to_string(e), expected[e],
                                 actual[e]});
    }
  }
  return VerifyReport::pass(std::move(context));
}

/// q-binomial theorem at z = q^k:
///   1/(z)_{a+1} = sum_j (q)_{a+j} / ((q)_a (q)_j) z^j.
inline VerifyReport verify_fact1(std::size_t a, std::size_t k,
                                 std::size_t order) {
  detail::require_positive_base(k);
  const qseries lhs = invert(q_pochhammer(k, a + 1, order));
  qseries rhs(order);
  for (std::size_t j = 0; k * j <= order; ++j) {
    rhs += gauss_binomial(a, j, order).shifted(k * j);
  }
  return compare_series(lhs, rhs,
                        "fact1 a=" + std::to_string(a) +
                            " k=" + std::to_string(k) +
                            " T=" + std::to_string(order));
}

/// The a -> infinity limit at z = q^k: 1/(z)_inf = sum_j z^j / (q)_j.
inline VerifyReport verify_fact2(std::size_t k, std::size_t order) {
  detail::require_positive_base(k);
  const qseries lhs = invert(q_pochhammer(k, infinity, order));
  qseries rhs(order);
  for (std::size_t j = 0; k * j <= order; ++j) {
    rhs += invert(q_pochhammer(1, j, order)).shifted(k * j);
  }
  return compare_series(
      lhs, rhs,
      "fact2 k=" + std::to_string(k) + " T=" + std::to_string(order));
}

}  // namespace armleg
