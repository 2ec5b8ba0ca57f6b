#pragma once

#include <utility>
#include <vector>

#include "skewschur/skew.hpp"

namespace skewschur {

// Filling of a skew shape; entries are stored row-major over the boxes only.
struct Tableau {
  SkewDiagram shape;
  std::vector<int> entries;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

// Reading word: rows top to bottom, each row right to left.
inline std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> out;
  out.reserve(t.entries.size());
  size_t pos = 0;
  for (int i = 0; i < t.shape.rows(); ++i) {
    int len = t.shape.row_length(i);
    for (int j = len - 1; j >= 0; --j) out.push_back(t.entries[pos + static_cast<size_t>(j)]);
    pos += static_cast<size_t>(len);
  }
  return out;
}

// A word is lattice when every prefix contains at least as many v's as
// (v+1)'s, for every v.
inline bool is_lattice(const std::vector<int>& word) {
  int maxv = 0;
  for (int v : word) maxv = std::max(maxv, v);
  std::vector<int> count(static_cast<size_t>(maxv) + 1, 0);
  for (int v : word) {
    if (v < 1) return false;
    if (v > 1 && count[static_cast<size_t>(v) - 1] <= count[static_cast<size_t>(v)]) return false;
    count[static_cast<size_t>(v)]++;
  }
  return true;
}

// Multiplicity vector of the entries: position v-1 counts the value v;
// trailing zeros are dropped.
inline std::vector<int> content(const Tableau& t) {
  std::vector<int> out;
  for (int v : t.entries) {
    if (v > static_cast<int>(out.size())) out.resize(static_cast<size_t>(v), 0);
    out[static_cast<size_t>(v) - 1]++;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline bool is_semistandard(const Tableau& t) {
  const SkewDiagram& d = t.shape;
  std::vector<size_t> offset(static_cast<size_t>(d.rows()) + 1, 0);
  for (int i = 0; i < d.rows(); ++i)
    offset[static_cast<size_t>(i) + 1] = offset[static_cast<size_t>(i)] +
                                         static_cast<size_t>(d.row_length(i));
  if (t.entries.size() != offset[static_cast<size_t>(d.rows())]) return false;
  auto at = [&](int i, int c) {  // entry at row i, 0-based column c
    return t.entries[offset[static_cast<size_t>(i)] + static_cast<size_t>(c - d.row_begin(i))];
  };
  for (int i = 0; i < d.rows(); ++i) {
    for (int c = d.row_begin(i); c < d.row_end(i); ++c) {
      if (at(i, c) < 1) return false;
      if (c > d.row_begin(i) && at(i, c) < at(i, c - 1)) return false;
      if (i > 0 && c >= d.row_begin(i - 1) && c < d.row_end(i - 1) && at(i, c) <= at(i - 1, c))
        return false;
    }
  }
  return true;
}

namespace detail {

// Backtracking enumeration of lattice semistandard fillings, visiting shapes
// box by box in row-major order and trying entries in increasing order, so
// tableaux come out in lexicographic order of their row-major entry
// sequences.
//
// The search never tests a complete reading word.  Filling row-major, the
// lattice property is equivalent to the per-placement rule used below: when a
// row holds t copies of v, the rows above must hold at least t more copies of
// v-1 than of v.  (Reading right to left, the leftmost v of a row is read
// after the row's other v's and after everything above, and a weakly
// increasing row puts no v-1 to its right, so that prefix is the binding
// one.)  Entries in row i never exceed i+1: each occurrence of v must sit in
// a strictly lower row than the matching occurrence of v-1.
class LatticeEnumerator {
 public:
  LatticeEnumerator(const SkewDiagram& shape, const std::vector<int>* caps)
      : shape_(shape), caps_(caps) {
    int n = shape.rows();
    grid_.assign(static_cast<size_t>(n), {});
    for (int i = 0; i < n; ++i)
      grid_[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.row_length(i)), 0);
    above_.assign(static_cast<size_t>(n) + 2, 0);
    row_.assign(static_cast<size_t>(n) + 2, 0);
  }

  // visit: bool(const Tableau&); false aborts.  Returns false when aborted.
  template <typename Visit>
  bool run(Visit&& visit) {
    return fill_row(0, visit);
  }

 private:
  template <typename Visit>
  bool fill_row(int i, Visit& visit) {
    if (i == shape_.rows()) return emit(visit);
    return fill_box(i, 0, visit);
  }

  template <typename Visit>
  bool fill_box(int i, int j, Visit& visit) {
    int len = shape_.row_length(i);
    if (j == len) {
      for (size_t v = 1; v < row_.size(); ++v) {
        above_[v] += row_[v];
        saved_.push_back(row_[v]);
        row_[v] = 0;
      }
      bool ok = fill_row(i + 1, visit);
      for (size_t v = row_.size(); v-- > 1;) {
        row_[v] = saved_.back();
        saved_.pop_back();
        above_[v] -= row_[v];
      }
      return ok;
    }
    int c = shape_.row_begin(i) + j;
    int lo = 1;
    if (j > 0) lo = std::max(lo, grid_[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]);
    if (i > 0 && c >= shape_.row_begin(i - 1) && c < shape_.row_end(i - 1))
      lo = std::max(lo, grid_[static_cast<size_t>(i - 1)]
                             [static_cast<size_t>(c - shape_.row_begin(i - 1))] + 1);
    int hi = i + 1;
    if (caps_) hi = std::min(hi, static_cast<int>(caps_->size()));
    for (int v = lo; v <= hi; ++v) {
      size_t sv = static_cast<size_t>(v);
      if (caps_ && above_[sv] + row_[sv] >= (*caps_)[sv - 1]) continue;
      if (v > 1 && above_[sv - 1] < above_[sv] + row_[sv] + 1) continue;
      grid_[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
      row_[sv]++;
      bool ok = fill_box(i, j + 1, visit);
      row_[sv]--;
      if (!ok) return false;
    }
    return true;
  }

  template <typename Visit>
  bool emit(Visit& visit) {
    Tableau t;
    t.shape = shape_;
    for (const auto& r : grid_) t.entries.insert(t.entries.end(), r.begin(), r.end());
    return visit(static_cast<const Tableau&>(t));
  }

  const SkewDiagram& shape_;
  const std::vector<int>* caps_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> above_, row_, saved_;
};

}  // namespace detail

// Visits every semistandard filling of the shape whose reading word is
// lattice, in lexicographic order of the row-major entry sequence.  The
// visitor returns false to stop early; the function returns false exactly
// when a visitor did.
template <typename Visit>
bool enumerate_lattice_ssyt(const SkewDiagram& shape, Visit&& visit) {
  detail::LatticeEnumerator e(shape, nullptr);
  return e.run(visit);
}

// As above, but the value v may occur at most caps[v-1] times (and values
// beyond caps.size() not at all).
template <typename Visit>
bool enumerate_lattice_ssyt_capped(const SkewDiagram& shape, const std::vector<int>& caps,
                                   Visit&& visit) {
  detail::LatticeEnumerator e(shape, &caps);
  return e.run(visit);
}

inline std::vector<Tableau> all_lattice_ssyt(const SkewDiagram& shape) {
  std::vector<Tableau> out;
  enumerate_lattice_ssyt(shape, [&](const Tableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

// Number of lattice fillings of lambda/mu with content nu.  Zero whenever mu
// does not fit in lambda or the sizes do not match.
inline int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!lambda.contains(mu)) return 0;
  if (lambda.size() != mu.size() + nu.size()) return 0;
  SkewDiagram shape(lambda, mu);
  // Under the caps, any completed filling has content exactly nu: each value
  // stays within its cap and the totals agree.
  int64_t count = 0;
  enumerate_lattice_ssyt_capped(shape, nu.parts(), [&](const Tableau&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace skewschur
