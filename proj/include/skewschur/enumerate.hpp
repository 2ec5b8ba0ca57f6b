#pragma once

#include <vector>

#include "skewschur/skew.hpp"

namespace skewschur {

namespace detail {

template <typename Fn>
void partitions_rec(std::vector<int>& parts, int64_t left, int maxpart, Fn& fn) {
  if (left == 0) {
    fn(Partition(std::vector<int>(parts)));
    return;
  }
  for (int v = static_cast<int>(std::min<int64_t>(maxpart, left)); v >= 1; --v) {
    parts.push_back(v);
    partitions_rec(parts, left - v, v, fn);
    parts.pop_back();
  }
}

template <typename Fn>
void compositions_rec(std::vector<int>& parts, int64_t left, Fn& fn) {
  if (left == 0) {
    fn(Composition(std::vector<int>(parts)));
    return;
  }
  for (int v = 1; v <= left; ++v) {
    parts.push_back(v);
    compositions_rec(parts, left - v, fn);
    parts.pop_back();
  }
}

template <typename Fn>
void subpartitions_rec(const Partition& p, std::vector<int>& parts, int i, Fn& fn) {
  if (i == p.length()) {
    fn(Partition(std::vector<int>(parts)));
    return;
  }
  int hi = i == 0 ? p[0] : std::min(p[i], parts[static_cast<size_t>(i - 1)]);
  for (int v = hi; v >= 0; --v) {
    parts.push_back(v);
    subpartitions_rec(p, parts, i + 1, fn);
    parts.pop_back();
  }
}

// Rows are built bottom to top; each row must start no further right than one
// past the end of the row below (so consecutive rows overlap or touch at the
// corner) and starts/ends weakly decrease downward.
template <typename Fn>
void skew_rows_rec(const std::vector<int>& lens, int i, std::vector<std::pair<int, int>>& rows,
                   Fn& fn) {
  if (i < 0) {
    std::vector<int> o, in;
    for (int j = static_cast<int>(rows.size()) - 1; j >= 0; --j) {
      in.push_back(rows[static_cast<size_t>(j)].first - 1);
      o.push_back(rows[static_cast<size_t>(j)].second);
    }
    fn(SkewDiagram(Partition(std::move(o)), Partition(std::move(in))));
    return;
  }
  int len = lens[static_cast<size_t>(i)];
  if (rows.empty()) {
    rows.push_back({1, len});
    skew_rows_rec(lens, i - 1, rows, fn);
    rows.pop_back();
    return;
  }
  auto [s, e] = rows.back();
  for (int sp = std::max(s, e - len + 1); sp <= e + 1; ++sp) {
    rows.push_back({sp, sp + len - 1});
    skew_rows_rec(lens, i - 1, rows, fn);
    rows.pop_back();
  }
}

}  // namespace detail

// All partitions of exactly n, largest part first within each.
template <typename Fn>
void for_each_partition_of(int64_t n, Fn&& fn) {
  std::vector<int> parts;
  detail::partitions_rec(parts, n, static_cast<int>(n), fn);
}

// All partitions of 0..n.
template <typename Fn>
void for_each_partition_upto(int64_t n, Fn&& fn) {
  for (int64_t k = 0; k <= n; ++k) for_each_partition_of(k, fn);
}

// All mu contained in p (including the empty partition and p itself).
template <typename Fn>
void for_each_subpartition(const Partition& p, Fn&& fn) {
  std::vector<int> parts;
  detail::subpartitions_rec(p, parts, 0, fn);
}

// All compositions of exactly n.
template <typename Fn>
void for_each_composition_of(int64_t n, Fn&& fn) {
  std::vector<int> parts;
  detail::compositions_rec(parts, n, fn);
}

// All compositions of 1..n.
template <typename Fn>
void for_each_composition_upto(int64_t n, Fn&& fn) {
  for (int64_t k = 1; k <= n; ++k) for_each_composition_of(k, fn);
}

// All skew diagrams with 1..max_boxes boxes, one representative per
// translation class: no empty rows, the bottom row starts in column 0, and
// consecutive rows overlap in a column or touch corner to corner (a wider
// horizontal gap never changes the skew Schur function, so sweeps use the
// tightest embedding).
template <typename Fn>
void for_each_skew_shape(int64_t max_boxes, Fn&& fn) {
  for (int64_t b = 1; b <= max_boxes; ++b) {
    for_each_composition_of(b, [&](const Composition& lens) {
      std::vector<std::pair<int, int>> rows;
      detail::skew_rows_rec(lens.parts(), lens.length() - 1, rows, fn);
    });
  }
}

}  // namespace skewschur
