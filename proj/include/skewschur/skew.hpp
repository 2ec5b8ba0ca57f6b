#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "skewschur/partition.hpp"

namespace skewschur {

// Skew diagram outer/inner.  Rows are indexed 0..rows()-1 top to bottom and
// row i occupies the 0-based column interval [row_begin(i), row_end(i)).
// Construction trims empty rows at the top and bottom, so equality is plain
// memberwise comparison; empty rows in the middle of a shape are kept (they
// occur, e.g. after removing a full column from a diagram with single-box
// rows).  No column normalisation is applied: translates that differ in their
// inner/outer pair compare unequal.
class SkewDiagram {
 public:
  SkewDiagram() = default;
  SkewDiagram(Partition outer, Partition inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw domain_error("inner partition must fit inside outer");
    if (outer_.size() > kMaxBoxes) throw domain_error("diagram too large");
    int lo = 0, hi = outer_.length();
    while (lo < hi && outer_[lo] == inner_[lo]) ++lo;
    while (hi > lo && outer_[hi - 1] == inner_[hi - 1]) --hi;
    if (lo > 0 || hi < outer_.length()) {
      std::vector<int> o, in;
      for (int i = lo; i < hi; ++i) {
        o.push_back(outer_[i]);
        in.push_back(inner_[i]);
      }
      outer_ = Partition(std::move(o));
      inner_ = Partition(std::move(in));
    }
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int rows() const { return outer_.length(); }
  int width() const { return outer_[0]; }
  int row_begin(int i) const { return inner_[i]; }
  int row_end(int i) const { return outer_[i]; }
  int row_length(int i) const { return outer_[i] - inner_[i]; }
  int64_t boxes() const { return outer_.size() - inner_.size(); }
  bool empty() const { return outer_.empty(); }

  friend bool operator==(const SkewDiagram&, const SkewDiagram&) = default;

 private:
  Partition outer_, inner_;
};

inline std::ostream& operator<<(std::ostream& os, const SkewDiagram& d) {
  return os << d.outer() << '/' << d.inner();
}

inline std::vector<int> row_lengths(const SkewDiagram& d) {
  std::vector<int> out;
  for (int i = 0; i < d.rows(); ++i) out.push_back(d.row_length(i));
  return out;
}

// Column lengths left to right over the full width; interior empty columns
// report 0 (they can occur, e.g. outer (3,1)/(2): columns 1,0,1).
inline std::vector<int> column_lengths(const SkewDiagram& d) {
  if (d.empty()) return {};
  std::vector<int> out(static_cast<size_t>(d.width()), 0);
  for (int i = 0; i < d.rows(); ++i)
    for (int c = d.row_begin(i); c < d.row_end(i); ++c) out[static_cast<size_t>(c)]++;
  return out;
}

// Edge connectivity of the box set: consecutive nonempty rows must be
// vertically adjacent and share at least one column.  Empty diagrams count
// as connected.
inline bool is_connected(const SkewDiagram& d) {
  int prev = -1;
  for (int i = 0; i < d.rows(); ++i) {
    if (d.row_length(i) == 0) continue;
    if (prev >= 0) {
      if (i != prev + 1) return false;
      if (d.row_end(i) <= d.row_begin(prev)) return false;
    }
    prev = i;
  }
  return true;
}

// 180 degree rotation; the result is re-anchored so its bottom row starts in
// column 0.
inline SkewDiagram rotate180(const SkewDiagram& d) {
  if (d.empty()) return {};
  int w = d.width(), h = d.rows();
  std::vector<int> o, in;
  for (int i = h - 1; i >= 0; --i) {
    o.push_back(w - d.row_begin(i));
    in.push_back(w - d.row_end(i));
  }
  return SkewDiagram(Partition(std::move(o)), Partition(std::move(in)));
}

namespace detail {

// Rows of a diagram as 1-based [start, end] column intervals on a shared
// grid, top to bottom; empty rows carry start = end + 1 at their nominal
// position so monotonicity survives reconstruction.
struct GridRow {
  int start, end;  // boxes at columns start..end; empty when start > end
};

inline SkewDiagram from_grid(std::vector<GridRow> rows) {
  int min_start = 1;
  for (const GridRow& r : rows) min_start = std::min(min_start, r.start);
  int shift = 1 - min_start;
  std::vector<int> o, in;
  for (const GridRow& r : rows) {
    o.push_back(r.end + shift);
    in.push_back(r.start - 1 + shift);
  }
  return SkewDiagram(Partition(std::move(o)), Partition(std::move(in)));
}

}  // namespace detail

// Near-concatenation at depth i: d2 is attached up and to the right of d1 so
// that the top-right box of d1 sits one column left of and i-1 rows above the
// bottom-left box of d2.  Depth 0 is the direct sum (corner contact only).
// The result is a skew diagram exactly when i is at most the length of d1's
// last (rightmost) column and of d2's first (leftmost) column, which is
// required here.
inline SkewDiagram near_concat(const SkewDiagram& d1, const SkewDiagram& d2, int depth) {
  if (d1.empty() || d2.empty()) throw domain_error("near-concatenation needs nonempty diagrams");
  if (depth < 0) throw domain_error("depth must be nonnegative");
  std::vector<int> cols1 = column_lengths(d1), cols2 = column_lengths(d2);
  int h2 = d2.rows();
  int c2 = d2.row_begin(h2 - 1);  // 0-based column of d2's bottom-left box
  if (depth > cols1.back() || depth > cols2[static_cast<size_t>(c2)])
    throw domain_error("depth exceeds the joining column lengths");

  int w1 = d1.width();
  // d1 occupies grid rows 1..h1; d2's bottom row lands on grid row `depth`.
  int dr = depth - h2;            // d2 row r' (1-based) -> grid row r' + dr
  int dc = w1 - c2;               // d2 1-based column c' -> c' + dc
  int lo = std::min(1, 1 + dr), hi = std::max(d1.rows(), depth);
  std::vector<detail::GridRow> grid;
  for (int g = lo; g <= hi; ++g) {
    bool in1 = g >= 1 && g <= d1.rows();
    bool in2 = g - dr >= 1 && g - dr <= h2;
    int r = g - dr - 1;
    if (in1 && in2) {
      // Shared rows run from d1's start through d2's end: the depth
      // precondition makes d1 end at column w1 and d2 start at w1 + 1 here.
      grid.push_back({d1.row_begin(g - 1) + 1, d2.row_end(r) + dc});
    } else if (in1) {
      grid.push_back({d1.row_begin(g - 1) + 1, d1.row_end(g - 1)});
    } else {
      grid.push_back({d2.row_begin(r) + 1 + dc, d2.row_end(r) + dc});
    }
  }
  return detail::from_grid(std::move(grid));
}

inline SkewDiagram direct_sum(const SkewDiagram& d1, const SkewDiagram& d2) {
  return near_concat(d1, d2, 0);
}

// Rotated fat staircase: the 180 degree rotation of fat_staircase(alpha).
inline SkewDiagram rotated_fat_staircase(const Composition& alpha) {
  return rotate180(SkewDiagram(fat_staircase(alpha), Partition()));
}

// A fat staircase in either orientation, as produced by the ^ / ^^ shape
// notation.
struct FatStaircase {
  Composition alpha;
  bool rotated = false;

  SkewDiagram diagram() const {
    return rotated ? rotated_fat_staircase(alpha)
                   : SkewDiagram(fat_staircase(alpha), Partition());
  }
};

// Attaches the foundation lambda/mu below d: the foundation's first row sits
// one row below and k columns left of d's bottom-left box, so the first
// foundation row shares lambda_1 - mu_1 - k columns with d's last row.  That
// overlap must be between 0 and the length of d's last row.  An empty
// foundation returns d unchanged.
inline SkewDiagram build_foundation(const Partition& lambda, const Partition& mu,
                                    const SkewDiagram& d, int k) {
  if (!lambda.contains(mu)) throw domain_error("foundation inner must fit inside outer");
  if (k < 0) throw domain_error("offset k must be nonnegative");
  if (lambda == mu) return d;
  if (d.empty()) throw domain_error("foundation needs a nonempty diagram to attach to");

  int h = d.rows();
  int c = d.row_begin(h - 1) + 1;  // 1-based column of d's bottom-left box
  int64_t overlap = static_cast<int64_t>(lambda[0]) - mu[0] - k;
  if (overlap < 0) throw domain_error("foundation offset k exceeds lambda_1 - mu_1");
  if (overlap > d.row_length(h - 1))
    throw domain_error("foundation overlap exceeds the last row of the diagram");

  int off = c - k - mu[0] - 1;  // foundation 1-based column x -> grid column x + off
  std::vector<detail::GridRow> grid;
  for (int i = 0; i < h; ++i) grid.push_back({d.row_begin(i) + 1, d.row_end(i)});
  for (int j = 0; j < lambda.length(); ++j)
    grid.push_back({mu[j] + 1 + off, lambda[j] + off});
  return detail::from_grid(std::move(grid));
}

inline SkewDiagram build_foundation(const Partition& lambda, const SkewDiagram& d, int k) {
  return build_foundation(lambda, Partition(), d, k);
}

}  // namespace skewschur
