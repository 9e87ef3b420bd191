#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace armleg {

/// Where and how an identity check first failed. `where` names the exponent,
/// weight or (c,d) key in a human-readable form.
struct Discrepancy {
  std::string where;
  std::int64_t expected = 0;
  std::int64_t actual = 0;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

/// Outcome of one verifier. `passed` holds exactly when no discrepancy was
/// recorded; construct through pass()/fail() to keep that true.
///
/// `values` optionally carries the sequence the check observed (for example
/// the brute-force counts of a lemma check) so callers can print it.
class VerifyReport {
 public:
  static VerifyReport pass(std::string context,
                           std::vector<std::int64_t> values = {}) {
    return VerifyReport(std::move(context), std::nullopt, std::move(values));
  }

  static VerifyReport fail(std::string context, Discrepancy first,
                           std::vector<std::int64_t> values = {}) {
    return VerifyReport(std::move(context), std::move(first),
                        std::move(values));
  }

  bool passed() const noexcept { return !first_.has_value(); }
  explicit operator bool() const noexcept { return passed(); }

  const std::optional<Discrepancy>& first_discrepancy() const noexcept {
    return first_;
  }
  const std::string& context() const noexcept { return context_; }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

 private:
  VerifyReport(std::string context, std::optional<Discrepancy> first,
               std::vector<std::int64_t> values)
      : context_(std::move(context)),
        first_(std::move(first)),
        values_(std::move(values)) {}

  std::string context_;
  std::optional<Discrepancy> first_;
  std::vector<std::int64_t> values_;
};

/// Folds sub-reports in order; the first failing one wins.
inline VerifyReport combine(std::string context,
                            const std::vector<VerifyReport>& parts) {
  for (const auto& part : parts) {
    if (!part.passed()) {
      Discrepancy d = *part.first_discrepancy();
      d.where = part.context() + ": " + d.where;
      return VerifyReport::fail(std::move(context), std::move(d));
    }
  }
  return VerifyReport::pass(std::move(context));
}

}  // namespace armleg
