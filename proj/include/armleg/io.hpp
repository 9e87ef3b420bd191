#pragma once

// Text, JSON and CSV renderings of reports, series, pair multisets and
// matchings, plus parsers for the multiset formats.
//
// CSV columns:
//   report    check,passed,where,expected,actual
//   series    exponent,coefficient
//   multiset  c,d,count
//   match     src_partition,src_row,src_col,dst_partition,dst_row,dst_col
//
// JSON matchings are line-delimited: one object per pair.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "armleg/errors.hpp"
#include "armleg/explorer.hpp"
#include "armleg/qseries.hpp"
#include "armleg/statistics.hpp"
#include "armleg/verify_report.hpp"

namespace armleg {

enum class OutputFormat { text, json, csv };

namespace detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

inline std::string csv_line_trimmed(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

inline void write_report_csv_row(std::ostream& os, const VerifyReport& r) {
  const auto& first = r.first_discrepancy();
  os << csv_field(r.context()) << ',' << (r.passed() ? "true" : "false")
     << ',';
  if (first) {
    os << csv_field(first->where) << ',' << first->expected << ','
       << first->actual;
  } else {
    os << ",,";
  }
  os << '\n';
}

}  // namespace detail

inline void write_report(std::ostream& os, const VerifyReport& r,
                         OutputFormat format) {
  const auto& first = r.first_discrepancy();
  switch (format) {
    case OutputFormat::text:
      os << (r.passed() ? "PASS " : "FAIL ") << r.context() << '\n';
      if (first) {
        os << "  first discrepancy at " << first->where << ": expected "
           << first->expected << ", got " << first->actual << '\n';
      }
      if (!r.values().empty()) {
        os << "  values:";
        for (std::size_t k = 0; k < r.values().size(); ++k) {
          os << (k ? "," : " ") << r.values()[k];
        }
        os << '\n';
      }
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["check"] = r.context();
      j["passed"] = r.passed();
      if (first) {
        j["first_discrepancy"] = {{"where", first->where},
                                  {"expected", first->expected},
                                  {"actual", first->actual}};
      } else {
        j["first_discrepancy"] = nullptr;
      }
      j["values"] = r.values();
      os << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "check,passed,where,expected,actual\n";
      detail::write_report_csv_row(os, r);
      break;
  }
}

/// Several reports; CSV output shares one header.
inline void write_reports(std::ostream& os,
                          const std::vector<VerifyReport>& reports,
                          OutputFormat format) {
  if (format != OutputFormat::csv) {
    for (const auto& r : reports) write_report(os, r, format);
    return;
  }
  os << "check,passed,where,expected,actual\n";
  for (const auto& r : reports) detail::write_report_csv_row(os, r);
}

inline void write_series(std::ostream& os, const qseries& s,
                         std::string_view label, OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      os << label << " (order " << s.order() << ")\n";
      for (std::size_t e = 0; e <= s.order(); ++e) {
        os << "q^" << e << '\t' << s[e] << '\n';
      }
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["series"] = label;
      j["order"] = s.order();
      j["coefficients"] =
          std::vector<std::int64_t>(s.coefficients().begin(),
                                    s.coefficients().end());
      os << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "exponent,coefficient\n";
      for (std::size_t e = 0; e <= s.order(); ++e) {
        os << e << ',' << s[e] << '\n';
      }
      break;
  }
}

inline void write_multiset(std::ostream& os, int n, PairFilling filling,
                           const PairMultiset& ms, OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      os << "multiset " << to_string(filling) << " n=" << n
         << " total=" << ms.total() << '\n';
      for (const auto& [key, count] : ms.entries()) {
        os << '(' << key.first << ',' << key.second << ")\t" << count << '\n';
      }
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["n"] = n;
      j["stat"] = to_string(filling);
      j["total"] = ms.total();
      auto entries = nlohmann::ordered_json::array();
      for (const auto& [key, count] : ms.entries()) {
        entries.push_back({{"c", key.first}, {"d", key.second}, {"count", count}});
      }
      j["entries"] = std::move(entries);
      os << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "c,d,count\n";
      for (const auto& [key, count] : ms.entries()) {
        os << key.first << ',' << key.second << ',' << count << '\n';
      }
      break;
  }
}

inline void write_matching(std::ostream& os, const Matching& m,
                           OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      os << "matching n=" << m.n << " pairs=" << m.pairs.size() << '\n';
      for (const auto& [src, dst] : m.pairs) {
        os << to_string(src) << " -> " << to_string(dst) << '\n';
      }
      break;
    case OutputFormat::json:
      for (const auto& [src, dst] : m.pairs) {
        nlohmann::ordered_json j;
        j["src_partition"] = src.partition_index;
        j["src_row"] = src.row;
        j["src_col"] = src.col;
        j["dst_partition"] = dst.partition_index;
        j["dst_row"] = dst.row;
        j["dst_col"] = dst.col;
        os << j.dump() << '\n';
      }
      break;
    case OutputFormat::csv:
      os << "src_partition,src_row,src_col,dst_partition,dst_row,dst_col\n";
      for (const auto& [src, dst] : m.pairs) {
        os << src.partition_index << ',' << src.row << ',' << src.col << ','
           << dst.partition_index << ',' << dst.row << ',' << dst.col << '\n';
      }
      break;
  }
}

/// Reads the `c,d,count` CSV written by write_multiset.
inline PairMultiset parse_multiset_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) ||
      detail::csv_line_trimmed(line) != "c,d,count") {
    throw usage_error("multiset csv: missing c,d,count header");
  }
  PairMultiset ms;
  while (std::getline(is, line)) {
    line = detail::csv_line_trimmed(line);
    if (line.empty()) continue;
    std::istringstream row(line);
    int c = 0, d = 0;
    std::int64_t count = 0;
    char comma1 = 0, comma2 = 0;
    if (!(row >> c >> comma1 >> d >> comma2 >> count) || comma1 != ',' ||
        comma2 != ',' || !(row >> std::ws).eof()) {
      throw usage_error("multiset csv: malformed row '" + line + "'");
    }
    ms.add(c, d, count);
  }
  return ms;
}

/// Reads the JSON document written by write_multiset.
inline PairMultiset parse_multiset_json(std::istream& is) {
  const auto j = nlohmann::json::parse(is);
  PairMultiset ms;
  for (const auto& e : j.at("entries")) {
    ms.add(e.at("c").get<int>(), e.at("d").get<int>(),
           e.at("count").get<std::int64_t>());
  }
  return ms;
}

}  // namespace armleg
