#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "skewschur/enumerate.hpp"
#include "skewschur/expansion.hpp"

namespace skewschur {

// Fills every column of d with 1,2,...,(column length) top to bottom.  The
// result is semistandard with a lattice reading word for every skew shape, so
// it doubles as a cheap certificate tableau: its content is the conjugate of
// the sorted column lengths, which fails to be a fat staircase exactly when
// two columns share a length.
inline Tableau column_filling(const SkewDiagram& d) {
  Tableau t;
  t.shape = d;
  if (d.empty()) return t;
  std::vector<int> depth(static_cast<size_t>(d.width()), 0);
  for (int i = 0; i < d.rows(); ++i)
    for (int c = d.row_begin(i); c < d.row_end(i); ++c)
      t.entries.push_back(++depth[static_cast<size_t>(c)]);
  return t;
}

inline bool has_distinct_column_lengths(const SkewDiagram& d) {
  std::vector<int> cols = column_lengths(d);
  std::erase(cols, 0);
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

// Outcome of asking whether every lattice filling of a diagram has a
// fat-staircase content.  A positive verdict carries the full decomposition,
// keyed by the multiplicity composition alpha(nu) of each content nu; a
// negative verdict carries one offending tableau.
struct FatSumCertificate {
  bool is_sum = false;
  std::map<Composition, int64_t> decomposition;
  std::optional<Tableau> witness;
};

// Classification by exhaustive enumeration alone, aborting at the first
// non-fat content.  Kept separate from classify_fat_sum so the column-length
// shortcut there can be cross-checked against it.
inline FatSumCertificate classify_by_enumeration(const SkewDiagram& d) {
  FatSumCertificate cert;
  bool complete = enumerate_lattice_ssyt(d, [&](const Tableau& t) {
    auto alpha = as_fat_staircase(Partition(content(t)));
    if (!alpha) {
      cert.witness = t;
      return false;
    }
    auto [it, fresh] = cert.decomposition.try_emplace(*alpha, 0);
    it->second = detail::checked_add(it->second, 1);
    return true;
  });
  if (!complete) {
    cert.decomposition.clear();
    return cert;
  }
  cert.is_sum = true;
  return cert;
}

// As classify_by_enumeration, but diagrams with a repeated column length are
// rejected up front: filling each column with 1..length is always a lattice
// filling, and a repeated length makes its content skip a value, so that
// tableau is a ready-made witness.
inline FatSumCertificate classify_fat_sum(const SkewDiagram& d) {
  if (!has_distinct_column_lengths(d)) {
    FatSumCertificate cert;
    cert.witness = column_filling(d);
    return cert;
  }
  return classify_by_enumeration(d);
}

// Distinct column lengths are necessary for a sum of fat staircases.  Runs
// the unshortcut classifier so the check is independent of the filter inside
// classify_fat_sum.
inline bool distinct_columns_necessary(const SkewDiagram& d) {
  if (!classify_by_enumeration(d).is_sum) return true;
  return has_distinct_column_lengths(d);
}

enum class Side { left, right };

// Necessary-condition screen for extending a diagram by one column of length
// c_len joined at the given depth (left: new column before the diagram;
// right: after it).  A diagram that is not a sum never becomes one by adding
// columns.  When the base is a sum, a hit in either membership test below
// certifies the extension is not a sum: shifting the values of a lattice
// filling whose content breaks at a partial sum of alpha produces a content
// that skips a value.  No hits decides nothing.  The length test uses every
// partial sum (the offset-0 admissible row values); the depth test must drop
// the full sum, since boosting every value of nu and appending fresh 1s
// yields a fat content again.  Depth 0 never obstructs.
struct ColumnExtensionEntry {
  Composition alpha;
  bool length_obstructs = false;  // c_len + 1 is an admissible row value of alpha at offset 0
  bool depth_obstructs = false;   // depth + 1 is such a value short of the largest
};

struct ColumnExtensionReport {
  SkewDiagram extension;
  bool base_is_sum = false;
  std::vector<ColumnExtensionEntry> entries;
  bool ruled_out = false;
};

inline ColumnExtensionReport check_column_addition(const SkewDiagram& d, int c_len, int depth,
                                                   Side side) {
  if (c_len < 1) throw domain_error("column length must be positive");
  SkewDiagram col(Partition(std::vector<int>(static_cast<size_t>(c_len), 1)), Partition());
  ColumnExtensionReport rep;
  rep.extension = side == Side::left ? near_concat(col, d, depth) : near_concat(d, col, depth);
  FatSumCertificate cert = classify_fat_sum(d);
  rep.base_is_sum = cert.is_sum;
  if (!cert.is_sum) {
    rep.ruled_out = true;
    return rep;
  }
  for (const auto& [alpha, coeff] : cert.decomposition) {
    std::vector<int> values = admissible_row_values(alpha, 0);
    ColumnExtensionEntry e;
    e.alpha = alpha;
    e.length_obstructs = std::binary_search(values.begin(), values.end(), c_len + 1);
    e.depth_obstructs = std::binary_search(values.begin(), values.end() - 1, depth + 1);
    if (e.length_obstructs || e.depth_obstructs) rep.ruled_out = true;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

// delta_alpha with a row of m boxes removed stays a sum of fat staircases
// exactly when every part of alpha except possibly the last exceeds 1;
// m itself does not matter within its legal range 1..l(alpha)-1.
inline bool rowcut_predicate(const Composition& alpha, int m) {
  int n = alpha.length();
  if (m < 1 || m >= n) throw domain_error("row cut size out of range");
  for (int j = 0; j + 1 < n; ++j)
    if (alpha[j] <= 1) return false;
  return true;
}

// delta_alpha with a column of m boxes removed stays a sum of fat staircases
// exactly when no adjacent pair of parts pins m between alpha_j and
// |alpha| - alpha_{j+1}.
inline bool colcut_predicate(const Composition& alpha, int m) {
  if (m < 1 || m >= alpha.size()) throw domain_error("column cut size out of range");
  int64_t total = alpha.size();
  for (int j = 0; j + 1 < alpha.length(); ++j)
    if (alpha[j] <= m && m <= total - alpha[j + 1]) return false;
  return true;
}

struct SweepReport {
  int64_t instances = 0;
  int64_t failures = 0;
};

struct CutInstance {
  bool row_cut = false;  // false: column cut
  Composition alpha;
  int m = 0;
  bool predicate = false;
  bool classified_sum = false;
  bool match = false;
};

// Compares rowcut_predicate against the classifier on delta_alpha/(m) for
// every composition with |alpha| <= max_size and every legal m.
template <typename Fn>
SweepReport sweep_row_cuts(int64_t max_size, Fn&& per_instance) {
  SweepReport rep;
  for_each_composition_upto(max_size, [&](const Composition& alpha) {
    Partition delta = fat_staircase(alpha);
    for (int m = 1; m < alpha.length(); ++m) {
      CutInstance inst{true, alpha, m, rowcut_predicate(alpha, m), false, false};
      inst.classified_sum = classify_fat_sum(SkewDiagram(delta, Partition{m})).is_sum;
      inst.match = inst.predicate == inst.classified_sum;
      ++rep.instances;
      if (!inst.match) ++rep.failures;
      per_instance(inst);
    }
  });
  return rep;
}

// Compares colcut_predicate against the classifier on delta_alpha/(1^m).
template <typename Fn>
SweepReport sweep_column_cuts(int64_t max_size, Fn&& per_instance) {
  SweepReport rep;
  for_each_composition_upto(max_size, [&](const Composition& alpha) {
    Partition delta = fat_staircase(alpha);
    for (int m = 1; m < alpha.size(); ++m) {
      CutInstance inst{false, alpha, m, colcut_predicate(alpha, m), false, false};
      Partition inner(std::vector<int>(static_cast<size_t>(m), 1));
      inst.classified_sum = classify_fat_sum(SkewDiagram(delta, inner)).is_sum;
      inst.match = inst.predicate == inst.classified_sum;
      ++rep.instances;
      if (!inst.match) ++rep.failures;
      per_instance(inst);
    }
  });
  return rep;
}

inline SweepReport verify_cut_theorems(int64_t max_size) {
  auto ignore = [](const CutInstance&) {};
  SweepReport rows = sweep_row_cuts(max_size, ignore);
  SweepReport cols = sweep_column_cuts(max_size, ignore);
  return {rows.instances + cols.instances, rows.failures + cols.failures};
}

namespace detail {

// The contiguous column range [lo, hi] of d, re-anchored at column 0.
inline SkewDiagram column_range(const SkewDiagram& d, int lo, int hi) {
  std::vector<int> o, in;
  for (int i = 0; i < d.rows(); ++i) {
    int b = std::clamp(d.row_begin(i), lo, hi + 1);
    int e = std::clamp(d.row_end(i), lo, hi + 1);
    in.push_back(b - lo);
    o.push_back(e - lo);
  }
  return SkewDiagram(Partition(std::move(o)), Partition(std::move(in)));
}

inline bool witness_refutes(const SkewDiagram& d, const FatSumCertificate& cert) {
  if (!cert.witness) return false;
  const Tableau& w = *cert.witness;
  return w.shape == d && is_semistandard(w) && is_lattice(reading_word(w)) &&
         !as_fat_staircase(Partition(content(w))).has_value();
}

}  // namespace detail

// Exhaustive classification sweep over all skew shapes with at most max_boxes
// boxes.  For every shape it checks that (a) the shortcut and plain
// classifiers agree, (b) a negative verdict carries a genuine witness,
// (c) a positive verdict implies pairwise distinct column lengths, and
// (d) every connected column range of a positive diagram is itself positive.
template <typename Fn>
SweepReport sweep_classification(int64_t max_boxes, Fn&& per_shape) {
  SweepReport rep;
  for_each_skew_shape(max_boxes, [&](const SkewDiagram& d) {
    FatSumCertificate cert = classify_fat_sum(d);
    bool ok = true;
    FatSumCertificate plain = classify_by_enumeration(d);
    if (cert.is_sum != plain.is_sum) ok = false;
    if (cert.is_sum && cert.decomposition != plain.decomposition) ok = false;
    if (cert.is_sum) {
      if (!has_distinct_column_lengths(d)) ok = false;
      for (int lo = 0; lo < d.width() && ok; ++lo)
        for (int hi = lo; hi < d.width() && ok; ++hi) {
          if (lo == 0 && hi == d.width() - 1) continue;
          SkewDiagram part = detail::column_range(d, lo, hi);
          if (part.empty() || !is_connected(part)) continue;
          if (!classify_fat_sum(part).is_sum) ok = false;
        }
    } else {
      if (!detail::witness_refutes(d, cert) || !detail::witness_refutes(d, plain)) ok = false;
    }
    ++rep.instances;
    if (!ok) ++rep.failures;
    per_shape(d, cert, ok);
  });
  return rep;
}

// f >= 0 style comparison of two expansions: difference = rhs - lhs and the
// verdict is its Schur positivity.
struct PositivityReport {
  SchurExpansion lhs, rhs, difference;
  bool positive = false;
};

namespace detail {

inline PositivityReport make_positivity_report(SchurExpansion lhs, SchurExpansion rhs) {
  PositivityReport rep;
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.difference = rep.rhs - rep.lhs;
  rep.positive = is_schur_positive(rep.difference);
  return rep;
}

// Sum of c * s over the foundation-extended rotated staircases of a
// decomposition.
inline SchurExpansion decomposition_foundation_sum(const FatSumCertificate& cert,
                                                   const Partition& lambda, const Partition& mu,
                                                   int k) {
  SchurExpansion out;
  for (const auto& [alpha, coeff] : cert.decomposition) {
    SchurExpansion part = skew_schur(build_foundation(lambda, mu, rotated_fat_staircase(alpha), k));
    out = out + coeff * part;
  }
  return out;
}

}  // namespace detail

// For a sum of fat staircases d with decomposition {alpha(nu): c}, attaching
// a foundation to d is dominated termwise by attaching the same foundation to
// each rotated staircase: lhs = s of S(lambda, mu, d; k), rhs = sum of
// c * s of S(lambda, mu, rotated staircase; k).
inline PositivityReport check_sum_of_fat_inequality(const Partition& lambda, const Partition& mu,
                                                    const SkewDiagram& d, int k) {
  FatSumCertificate cert = classify_fat_sum(d);
  if (!cert.is_sum) throw domain_error("diagram is not a sum of fat staircases");
  SchurExpansion lhs = skew_schur(build_foundation(lambda, mu, d, k));
  SchurExpansion rhs = detail::decomposition_foundation_sum(cert, lambda, mu, k);
  return detail::make_positivity_report(std::move(lhs), std::move(rhs));
}

// Same comparison, but the left side is recomputed through the rectangle
// complement: with S(lambda, mu, d; k) = beta/theta inside its bounding
// rectangle, s_{beta/theta} equals the truncated complement of
// s_theta * s_{beta complement}.  The two routes must agree exactly.
inline PositivityReport check_rect_complement(const Partition& lambda, const Partition& mu,
                                              const SkewDiagram& d, int k) {
  FatSumCertificate cert = classify_fat_sum(d);
  if (!cert.is_sum) throw domain_error("diagram is not a sum of fat staircases");
  SkewDiagram s = build_foundation(lambda, mu, d, k);
  int a = s.rows(), b = s.width();
  SchurExpansion lhs =
      truncated_complement(schur_product(s.inner(), complement_in_rectangle(s.outer(), a, b)), a, b);
  if (lhs != skew_schur(s))
    throw std::logic_error("complement route disagrees with direct expansion");
  SchurExpansion rhs = detail::decomposition_foundation_sum(cert, lambda, mu, k);
  return detail::make_positivity_report(std::move(lhs), std::move(rhs));
}

// Attaching a single row below a rotated staircase is dominated by attaching
// the transposed (single column) foundation instead: lhs uses the row, rhs
// the column.  Requires 0 <= k <= 1 and row length - k at most l(alpha).
inline PositivityReport check_transpose_positivity(const Partition& lambda,
                                                   const Composition& alpha, int k) {
  if (lambda.length() != 1) throw domain_error("foundation must be a single row");
  if (k < 0 || k > 1) throw domain_error("offset k must be 0 or 1");
  if (lambda[0] - k > alpha.length())
    throw domain_error("row too long for the staircase width");
  SkewDiagram delta = rotated_fat_staircase(alpha);
  SchurExpansion row_side = skew_schur(build_foundation(lambda, delta, k));
  SchurExpansion col_side = skew_schur(build_foundation(conjugate(lambda), delta, k));
  return detail::make_positivity_report(std::move(row_side), std::move(col_side));
}

// Layered comparison for a sum of fat staircases d and a single-row
// foundation at offset 1: the transposed-minus-plain difference over d
// dominates the same difference summed over the decomposition, which is
// itself nonnegative; and on the transposed side the domination collapses to
// an exact identity, recorded here as a residual that must vanish.
struct LayeredPositivityReport {
  SchurExpansion upper;            // s over d: column foundation minus row foundation
  SchurExpansion lower;            // the same difference summed over the decomposition
  SchurExpansion gap;              // upper - lower
  SchurExpansion column_residual;  // column side of upper minus column side of lower
  bool positive = false;           // gap and lower nonnegative, residual exactly zero
};

inline LayeredPositivityReport check_sum_of_diff(const Partition& lambda, const SkewDiagram& d) {
  if (lambda.length() != 1) throw domain_error("foundation must be a single row");
  FatSumCertificate cert = classify_fat_sum(d);
  if (!cert.is_sum) throw domain_error("diagram is not a sum of fat staircases");
  if (lambda[0] - 1 > d.row_length(d.rows() - 1))
    throw domain_error("row too long for the last row of the diagram");
  Partition column = conjugate(lambda);
  SchurExpansion d_row = skew_schur(build_foundation(lambda, d, 1));
  SchurExpansion d_col = skew_schur(build_foundation(column, d, 1));
  SchurExpansion sum_row = detail::decomposition_foundation_sum(cert, lambda, Partition(), 1);
  SchurExpansion sum_col = detail::decomposition_foundation_sum(cert, column, Partition(), 1);
  LayeredPositivityReport rep;
  rep.upper = d_col - d_row;
  rep.lower = sum_col - sum_row;
  rep.gap = rep.upper - rep.lower;
  rep.column_residual = d_col - sum_col;
  rep.positive = is_schur_positive(rep.gap) && is_schur_positive(rep.lower) &&
                 rep.column_residual.zero();
  return rep;
}

namespace detail {

template <typename Fn>
void for_each_fat_sum_shape(int64_t max_boxes, Fn&& fn) {
  for_each_skew_shape(max_boxes, [&](const SkewDiagram& d) {
    FatSumCertificate cert = classify_fat_sum(d);
    if (cert.is_sum) fn(d, cert);
  });
}

}  // namespace detail

// Runs check_sum_of_fat_inequality over every sum of fat staircases with at
// most max_boxes boxes, every foundation partition with at most
// max_foundation boxes (the empty one included), and every offset in
// `offsets`, skipping instances whose overlap is infeasible.
template <typename Fn>
SweepReport sweep_sum_of_fat(int64_t max_boxes, int64_t max_foundation,
                             const std::vector<int>& offsets, Fn&& per_instance) {
  SweepReport rep;
  detail::for_each_fat_sum_shape(max_boxes, [&](const SkewDiagram& d, const FatSumCertificate&) {
    int last = d.row_length(d.rows() - 1);
    for_each_partition_upto(max_foundation, [&](const Partition& lambda) {
      for (int k : offsets) {
        if (!lambda.empty() && (lambda[0] - k < 0 || lambda[0] - k > last)) continue;
        PositivityReport r = check_sum_of_fat_inequality(lambda, Partition(), d, k);
        ++rep.instances;
        if (!r.positive) ++rep.failures;
        per_instance(lambda, d, k, r);
      }
    });
  });
  return rep;
}

// Runs check_transpose_positivity for every composition with at most
// max_alpha boxes, row lengths 1..max_row, and offsets 0 and 1.
template <typename Fn>
SweepReport sweep_transpose(int64_t max_alpha, int max_row, Fn&& per_instance) {
  SweepReport rep;
  for_each_composition_upto(max_alpha, [&](const Composition& alpha) {
    for (int row = 1; row <= max_row; ++row) {
      for (int k = 0; k <= 1; ++k) {
        if (row - k > alpha.length()) continue;
        Partition lambda{row};
        PositivityReport r = check_transpose_positivity(lambda, alpha, k);
        ++rep.instances;
        if (!r.positive) ++rep.failures;
        per_instance(lambda, alpha, k, r);
      }
    }
  });
  return rep;
}

// Runs check_sum_of_diff over every sum of fat staircases with at most
// max_boxes boxes and row lengths 1..max_row allowed by the last row of the
// diagram.
template <typename Fn>
SweepReport sweep_sum_of_diff(int64_t max_boxes, int max_row, Fn&& per_instance) {
  SweepReport rep;
  detail::for_each_fat_sum_shape(max_boxes, [&](const SkewDiagram& d, const FatSumCertificate&) {
    int last = d.row_length(d.rows() - 1);
    for (int row = 1; row <= max_row; ++row) {
      if (row - 1 > last) continue;
      Partition lambda{row};
      LayeredPositivityReport r = check_sum_of_diff(lambda, d);
      ++rep.instances;
      if (!r.positive) ++rep.failures;
      per_instance(lambda, d, r);
    }
  });
  return rep;
}

}  // namespace skewschur
