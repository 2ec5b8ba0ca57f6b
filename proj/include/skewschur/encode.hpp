#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skewschur/staircase.hpp"

namespace skewschur {

// Text encodings used on the command line.
//
//   partition     "3,2,1"; "-" for the empty partition
//   composition   "1,3" (order matters, parts positive)
//   skew shape    "outer/inner" with either side a partition; the inner part
//                 may be omitted ("3,1" is the straight shape 3,1/-).
//                 "^alpha" is the fat staircase of alpha as a straight outer
//                 shape, "^^alpha" its 180 degree rotation as a skew shape.
//   tableau       rows joined by ';', entries in a row joined by ','; boxes
//                 only, the shape travels separately.
//
// Malformed text raises parse_error; structurally invalid values (increasing
// partition parts, inner not contained in outer, ...) raise domain_error.

namespace detail {

inline std::vector<int> parse_int_list(std::string_view s, const char* what) {
  std::vector<int> out;
  size_t pos = 0;
  while (true) {
    size_t comma = s.find(',', pos);
    std::string_view token = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size())
      throw parse_error(std::string("expected a comma-separated list of integers for ") + what);
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

inline Partition parse_partition(std::string_view s) {
  if (s == "-") return Partition();
  return Partition(detail::parse_int_list(s, "a partition"));
}

inline Composition parse_composition(std::string_view s) {
  if (s == "-") return Composition();
  return Composition(detail::parse_int_list(s, "a composition"));
}

inline std::string print_partition(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

inline std::string print_composition(const Composition& a) {
  if (a.empty()) return "-";
  std::string out;
  for (int i = 0; i < a.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

inline SkewDiagram parse_skew(std::string_view s) {
  if (s.starts_with("^^")) {
    if (s.find('/') != std::string_view::npos)
      throw parse_error("a rotated fat staircase is already skew and takes no inner shape");
    return rotated_fat_staircase(parse_composition(s.substr(2)));
  }
  std::string_view outer_text = s, inner_text = "-";
  if (size_t slash = s.find('/'); slash != std::string_view::npos) {
    outer_text = s.substr(0, slash);
    inner_text = s.substr(slash + 1);
    if (inner_text.find('/') != std::string_view::npos)
      throw parse_error("a skew shape has at most one '/'");
  }
  Partition outer = outer_text.starts_with('^')
                        ? fat_staircase(parse_composition(outer_text.substr(1)))
                        : parse_partition(outer_text);
  return SkewDiagram(std::move(outer), parse_partition(inner_text));
}

inline std::string print_skew(const SkewDiagram& d) {
  return print_partition(d.outer()) + "/" + print_partition(d.inner());
}

inline std::string print_tableau(const Tableau& t) {
  std::string out;
  size_t next = 0;
  for (int i = 0; i < t.shape.rows(); ++i) {
    if (i) out += ';';
    for (int j = 0; j < t.shape.row_length(i); ++j) {
      if (j) out += ',';
      out += std::to_string(t.entries[next++]);
    }
  }
  return out;
}

// JSON encodings: arrays for partitions and compositions, an array of
// {"partition", "coeff"} objects (in display order) for expansions, and a
// fixed five-key report object ("instance", "verdict", "decomposition",
// "witness", "difference") shared by the classification and positivity
// reports, with null for the fields a report does not carry.

inline nlohmann::json to_json(const Partition& p) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < p.length(); ++i) out.push_back(p[i]);
  return out;
}

inline nlohmann::json to_json(const Composition& a) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < a.length(); ++i) out.push_back(a[i]);
  return out;
}

inline nlohmann::json to_json(const SchurExpansion& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [p, c] : f.terms())
    out.push_back({{"partition", to_json(p)}, {"coeff", c}});
  return out;
}

namespace detail {

inline nlohmann::json report_skeleton(std::string instance, std::string verdict) {
  return {{"instance", std::move(instance)},
          {"verdict", std::move(verdict)},
          {"decomposition", nullptr},
          {"witness", nullptr},
          {"difference", nullptr}};
}

inline nlohmann::json decomposition_json(const std::map<Composition, int64_t>& decomposition) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [alpha, coeff] : decomposition)
    out.push_back({{"alpha", to_json(alpha)}, {"coeff", coeff}});
  return out;
}

}  // namespace detail

inline nlohmann::json to_json(const SkewDiagram& d, const FatSumCertificate& cert) {
  nlohmann::json out =
      detail::report_skeleton(print_skew(d), cert.is_sum ? "sum" : "not_sum");
  if (cert.is_sum) out["decomposition"] = detail::decomposition_json(cert.decomposition);
  if (cert.witness) out["witness"] = print_tableau(*cert.witness);
  return out;
}

inline nlohmann::json to_json(std::string instance, const PositivityReport& rep) {
  nlohmann::json out = detail::report_skeleton(std::move(instance),
                                               rep.positive ? "positive" : "not_positive");
  out["difference"] = to_json(rep.difference);
  out["lhs"] = to_json(rep.lhs);
  out["rhs"] = to_json(rep.rhs);
  return out;
}

inline nlohmann::json to_json(std::string instance, const LayeredPositivityReport& rep) {
  nlohmann::json out = detail::report_skeleton(std::move(instance),
                                               rep.positive ? "positive" : "not_positive");
  out["difference"] = to_json(rep.gap);
  out["upper"] = to_json(rep.upper);
  out["lower"] = to_json(rep.lower);
  out["column_residual"] = to_json(rep.column_residual);
  return out;
}

}  // namespace skewschur
