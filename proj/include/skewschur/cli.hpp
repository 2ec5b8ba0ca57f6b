#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewschur/encode.hpp"

namespace skewschur::cli {

namespace detail {

inline const char* verdict(bool is_sum) { return is_sum ? "sum" : "not_sum"; }

inline std::string foundation_label(const Partition& lambda, const Partition& mu,
                                    const std::string& base, int k) {
  return "S(" + print_partition(lambda) + "/" + print_partition(mu) + ", " + base +
         "; k=" + std::to_string(k) + ")";
}

inline std::string cut_label(const char* kind, const Composition& alpha, int m) {
  return std::string(kind) + " alpha=" + print_composition(alpha) + " m=" + std::to_string(m);
}

inline int print_cut(std::ostream& out, const char* kind, const Composition& alpha, int m,
                     bool predicate, bool classified, bool json) {
  bool agree = predicate == classified;
  if (json) {
    nlohmann::json j{{"alpha", to_json(alpha)},
                     {"m", m},
                     {"predicate", verdict(predicate)},
                     {"classifier", verdict(classified)},
                     {"agree", agree}};
    out << j.dump() << '\n';
  } else {
    out << cut_label(kind, alpha, m) << " predicate=" << verdict(predicate)
        << " classifier=" << verdict(classified) << " agree=" << (agree ? "yes" : "no") << '\n';
  }
  return agree ? 0 : 1;
}

inline int print_positivity(std::ostream& out, const std::string& instance,
                            const PositivityReport& rep, bool json) {
  if (json) {
    out << to_json(instance, rep).dump() << '\n';
  } else {
    out << "lhs: " << to_text(rep.lhs) << '\n';
    out << "rhs: " << to_text(rep.rhs) << '\n';
    out << "difference: " << to_text(rep.difference) << '\n';
    out << "positive: " << (rep.positive ? "yes" : "no") << '\n';
  }
  return rep.positive ? 0 : 1;
}

inline int print_layered(std::ostream& out, const std::string& instance,
                         const LayeredPositivityReport& rep, bool json) {
  if (json) {
    out << to_json(instance, rep).dump() << '\n';
  } else {
    out << "upper: " << to_text(rep.upper) << '\n';
    out << "lower: " << to_text(rep.lower) << '\n';
    out << "gap: " << to_text(rep.gap) << '\n';
    out << "column_residual: " << to_text(rep.column_residual) << '\n';
    out << "positive: " << (rep.positive ? "yes" : "no") << '\n';
  }
  return rep.positive ? 0 : 1;
}

}  // namespace detail

// Runs one command against the given streams and returns the process exit
// code: 0 on success, 1 when a verification fails or a mathematical
// precondition is violated, 2 on unusable input (bad syntax, unknown
// options).  `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact skew Schur function computations over the Schur basis"};
  app.name("skewschur");
  app.require_subcommand(1);

  std::string ex_shape, ex_foundation, ex_inner = "-";
  int ex_k = 0;
  bool ex_json = false;
  CLI::App* expand = app.add_subcommand("expand", "Schur expansion of a skew shape");
  expand->add_option("shape", ex_shape, "skew shape: outer/inner, ^alpha, or ^^alpha")
      ->required();
  CLI::Option* ex_f = expand->add_option("--foundation", ex_foundation,
                                         "partition to attach below the shape");
  expand->add_option("--inner", ex_inner, "inner partition of the foundation")->needs(ex_f);
  expand->add_option("--k", ex_k, "foundation offset (columns left of the shape)")->needs(ex_f);
  expand->add_flag("--json", ex_json, "emit JSON");

  std::string lr_outer, lr_inner, lr_content;
  bool lr_json = false;
  CLI::App* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  lr->add_option("outer", lr_outer, "outer partition")->required();
  lr->add_option("inner", lr_inner, "inner partition")->required();
  lr->add_option("content", lr_content, "content partition")->required();
  lr->add_flag("--json", lr_json, "emit JSON");

  std::string pr_left, pr_right;
  bool pr_json = false;
  CLI::App* product = app.add_subcommand("product", "product of two Schur functions");
  product->add_option("left", pr_left, "partition")->required();
  product->add_option("right", pr_right, "partition")->required();
  product->add_flag("--json", pr_json, "emit JSON");

  std::string cl_shape;
  bool cl_json = false;
  CLI::App* classify = app.add_subcommand("classify", "sum-of-fat-staircases certificate");
  classify->add_option("shape", cl_shape, "skew shape")->required();
  classify->add_flag("--json", cl_json, "emit JSON");

  std::string bs_shape, bs_foundation, bs_inner = "-";
  int bs_k = 0;
  CLI::App* build = app.add_subcommand("build-s", "attach a foundation and print the shape");
  build->add_option("shape", bs_shape, "skew shape")->required();
  build->add_option("--foundation", bs_foundation, "partition to attach below the shape")
      ->required();
  build->add_option("--inner", bs_inner, "inner partition of the foundation");
  build->add_option("--k", bs_k, "foundation offset");

  std::string rc_alpha;
  int rc_m = 0;
  bool rc_json = false;
  CLI::App* rowcut = app.add_subcommand("verify-rowcut",
                                        "row-removal criterion against the classifier");
  rowcut->add_option("alpha", rc_alpha, "composition")->required();
  rowcut->add_option("m", rc_m, "row length to remove")->required();
  rowcut->add_flag("--json", rc_json, "emit JSON");

  std::string cc_alpha;
  int cc_m = 0;
  bool cc_json = false;
  CLI::App* colcut = app.add_subcommand("verify-colcut",
                                        "column-removal criterion against the classifier");
  colcut->add_option("alpha", cc_alpha, "composition")->required();
  colcut->add_option("m", cc_m, "column length to remove")->required();
  colcut->add_flag("--json", cc_json, "emit JSON");

  std::string vp_check, vp_shape, vp_alpha, vp_foundation, vp_inner = "-";
  int vp_k = 0;
  bool vp_json = false;
  CLI::App* positivity = app.add_subcommand("verify-positivity",
                                            "Schur positivity of a foundation inequality");
  positivity->add_option("--check", vp_check, "which inequality to verify")
      ->required()
      ->check(CLI::IsMember({"sumoffat", "rect", "transpose", "sumofdiff"}));
  positivity->add_option("--shape", vp_shape, "skew shape (sumoffat, rect, sumofdiff)");
  positivity->add_option("--alpha", vp_alpha, "staircase composition (transpose)");
  positivity->add_option("--foundation", vp_foundation, "foundation partition");
  positivity->add_option("--inner", vp_inner, "foundation inner partition (sumoffat, rect)");
  CLI::Option* vp_k_opt = positivity->add_option("--k", vp_k, "foundation offset");
  positivity->add_flag("--json", vp_json, "emit JSON");

  std::string sw_theorem;
  int64_t sw_max = 0;
  int64_t sw_max_foundation = 4;
  int sw_max_row = 4;
  bool sw_json = false;
  CLI::App* sweep = app.add_subcommand("sweep", "exhaustive check of a statement up to a size");
  sweep->add_option("--theorem", sw_theorem, "which statement to sweep")
      ->required()
      ->check(CLI::IsMember(
          {"rowcut", "colcut", "distinct-columns", "sumoffat", "transpose", "sumofdiff"}));
  sweep->add_option("--max-size", sw_max, "size bound (boxes of the diagram or of alpha)")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--max-foundation", sw_max_foundation, "foundation size bound (sumoffat)");
  sweep->add_option("--max-row", sw_max_row, "foundation row bound (transpose, sumofdiff)");
  sweep->add_flag("--json", sw_json, "summary as JSON (suppresses per-instance lines)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (expand->parsed()) {
      SkewDiagram d = parse_skew(ex_shape);
      if (ex_f->count() > 0)
        d = build_foundation(parse_partition(ex_foundation), parse_partition(ex_inner), d, ex_k);
      SchurExpansion f = skew_schur(d);
      if (ex_json)
        out << to_json(f).dump() << '\n';
      else
        out << to_text(f) << '\n';
      return 0;
    }

    if (lr->parsed()) {
      int64_t c = lr_coefficient(parse_partition(lr_outer), parse_partition(lr_inner),
                                 parse_partition(lr_content));
      if (lr_json)
        out << nlohmann::json{{"coefficient", c}}.dump() << '\n';
      else
        out << c << '\n';
      return 0;
    }

    if (product->parsed()) {
      SchurExpansion f = schur_product(parse_partition(pr_left), parse_partition(pr_right));
      if (pr_json)
        out << to_json(f).dump() << '\n';
      else
        out << to_text(f) << '\n';
      return 0;
    }

    if (classify->parsed()) {
      SkewDiagram d = parse_skew(cl_shape);
      FatSumCertificate cert = classify_fat_sum(d);
      if (cl_json) {
        out << to_json(d, cert).dump() << '\n';
      } else if (cert.is_sum) {
        out << "sum of fat staircases\n";
        for (const auto& [alpha, coeff] : cert.decomposition)
          out << "alpha=" << print_composition(alpha) << " coeff=" << coeff << '\n';
      } else {
        out << "not a sum of fat staircases\n";
        out << "witness=" << print_tableau(*cert.witness) << '\n';
        out << "content=" << print_partition(Partition(content(*cert.witness))) << '\n';
      }
      return 0;
    }

    if (build->parsed()) {
      SkewDiagram d = build_foundation(parse_partition(bs_foundation), parse_partition(bs_inner),
                                       parse_skew(bs_shape), bs_k);
      out << print_skew(d) << '\n';
      return 0;
    }

    if (rowcut->parsed()) {
      Composition alpha = parse_composition(rc_alpha);
      bool predicate = rowcut_predicate(alpha, rc_m);
      bool classified =
          classify_fat_sum(SkewDiagram(fat_staircase(alpha), Partition{rc_m})).is_sum;
      return detail::print_cut(out, "rowcut", alpha, rc_m, predicate, classified, rc_json);
    }

    if (colcut->parsed()) {
      Composition alpha = parse_composition(cc_alpha);
      bool predicate = colcut_predicate(alpha, cc_m);
      Partition inner(std::vector<int>(static_cast<size_t>(cc_m), 1));
      bool classified = classify_fat_sum(SkewDiagram(fat_staircase(alpha), inner)).is_sum;
      return detail::print_cut(out, "colcut", alpha, cc_m, predicate, classified, cc_json);
    }

    if (positivity->parsed()) {
      if (vp_check == "transpose") {
        if (vp_alpha.empty() || vp_foundation.empty()) {
          err << "verify-positivity --check transpose needs --alpha and --foundation\n";
          return 2;
        }
        Partition lambda = parse_partition(vp_foundation);
        Composition alpha = parse_composition(vp_alpha);
        std::string instance = "transpose " + print_partition(lambda) + " over ^^" +
                               print_composition(alpha) + "; k=" + std::to_string(vp_k);
        return detail::print_positivity(out, instance,
                                        check_transpose_positivity(lambda, alpha, vp_k), vp_json);
      }
      if (vp_shape.empty() || vp_foundation.empty()) {
        err << "verify-positivity --check " << vp_check << " needs --shape and --foundation\n";
        return 2;
      }
      SkewDiagram d = parse_skew(vp_shape);
      Partition lambda = parse_partition(vp_foundation);
      Partition mu = parse_partition(vp_inner);
      if (vp_check == "sumofdiff") {
        if (vp_k_opt->count() > 0 && vp_k != 1) {
          err << "verify-positivity --check sumofdiff always uses offset 1\n";
          return 2;
        }
        std::string instance = "layered " + print_partition(lambda) + " over " + print_skew(d);
        return detail::print_layered(out, instance, check_sum_of_diff(lambda, d), vp_json);
      }
      std::string instance = detail::foundation_label(lambda, mu, print_skew(d), vp_k);
      PositivityReport rep = vp_check == "rect"
                                 ? check_rect_complement(lambda, mu, d, vp_k)
                                 : check_sum_of_fat_inequality(lambda, mu, d, vp_k);
      return detail::print_positivity(out, instance, rep, vp_json);
    }

    // sweep
    SweepReport rep;
    if (sw_theorem == "rowcut" || sw_theorem == "colcut") {
      auto line = [&](const CutInstance& inst) {
        if (sw_json) return;
        out << (inst.match ? "ok " : "FAIL ")
            << detail::cut_label(inst.row_cut ? "rowcut" : "colcut", inst.alpha, inst.m) << '\n';
      };
      rep = sw_theorem == "rowcut" ? sweep_row_cuts(sw_max, line)
                                   : sweep_column_cuts(sw_max, line);
    } else if (sw_theorem == "distinct-columns") {
      rep = sweep_classification(
          sw_max, [&](const SkewDiagram& d, const FatSumCertificate& cert, bool ok) {
            if (sw_json) return;
            out << (ok ? "ok " : "FAIL ") << print_skew(d) << ' '
                << detail::verdict(cert.is_sum) << '\n';
          });
    } else if (sw_theorem == "sumoffat") {
      rep = sweep_sum_of_fat(sw_max, sw_max_foundation, {0, 1, 2},
                             [&](const Partition& lambda, const SkewDiagram& d, int k,
                                 const PositivityReport& r) {
                               if (sw_json) return;
                               out << (r.positive ? "ok " : "FAIL ")
                                   << detail::foundation_label(lambda, Partition(), print_skew(d),
                                                               k)
                                   << '\n';
                             });
    } else if (sw_theorem == "transpose") {
      rep = sweep_transpose(sw_max, sw_max_row,
                            [&](const Partition& lambda, const Composition& alpha, int k,
                                const PositivityReport& r) {
                              if (sw_json) return;
                              out << (r.positive ? "ok " : "FAIL ") << "transpose "
                                  << print_partition(lambda) << " over ^^"
                                  << print_composition(alpha) << "; k=" << k << '\n';
                            });
    } else {
      rep = sweep_sum_of_diff(sw_max, sw_max_row,
                              [&](const Partition& lambda, const SkewDiagram& d,
                                  const LayeredPositivityReport& r) {
                                if (sw_json) return;
                                out << (r.positive ? "ok " : "FAIL ") << "layered "
                                    << print_partition(lambda) << " over " << print_skew(d)
                                    << '\n';
                              });
    }
    if (sw_json)
      out << nlohmann::json{{"theorem", sw_theorem},
                            {"instances", rep.instances},
                            {"failures", rep.failures}}
                 .dump()
          << '\n';
    else
      out << "checked " << rep.instances << " instances, " << rep.failures << " failures\n";
    return rep.failures == 0 ? 0 : 1;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace skewschur::cli
