#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewschur {

using std::int64_t;

// Violated mathematical precondition (bad shape, infeasible placement, ...).
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hard cap on diagram sizes; keeps every coordinate well inside int range.
inline constexpr int64_t kMaxBoxes = 1'000'000;

namespace detail {

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow (add)");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow (mul)");
  return r;
}

}  // namespace detail

// Finite sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p <= 0) throw domain_error("composition parts must be positive");
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int64_t size() const {
    int64_t s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// Integer partition: weakly decreasing positive parts.  Trailing zeros in the
// input are accepted and stripped, so the stored form is canonical and
// equality is plain memberwise comparison.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw domain_error("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw domain_error("partition parts must weakly decrease");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int64_t size() const {
    int64_t s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  // 0-based part access, padded with zeros past the last part.
  int operator[](int i) const {
    return i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }
  // True if every part of inner fits inside this partition (inner ⊆ outer).
  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
      if (inner[i] > (*this)[i]) return false;
    return true;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Orders partitions by descending lexicographic comparison of their parts
// (missing parts read as 0).  This is the display and iteration order for
// Schur expansions.
struct LexDesc {
  bool operator()(const Partition& a, const Partition& b) const {
    int n = std::max(a.length(), b.length());
    for (int i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '[';
  for (int i = 0; i < p.length(); ++i) os << (i ? "," : "") << p[i];
  return os << ']';
}

inline std::ostream& operator<<(std::ostream& os, const Composition& c) {
  os << '(';
  for (int i = 0; i < c.length(); ++i) os << (i ? "," : "") << c[i];
  return os << ')';
}

inline Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<size_t>(p[0]), 0);
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) cols[static_cast<size_t>(j)]++;
  return Partition(std::move(cols));
}

// Complement of p inside the a-row, b-column rectangle: remove p's boxes from
// the rectangle and rotate what is left by 180 degrees.
inline Partition complement_in_rectangle(const Partition& p, int rows, int cols) {
  if (rows < 0 || cols < 0) throw domain_error("rectangle sides must be nonnegative");
  if (p.length() > rows || p[0] > cols)
    throw domain_error("partition does not fit inside the rectangle");
  std::vector<int> out;
  out.reserve(static_cast<size_t>(rows));
  for (int i = rows - 1; i >= 0; --i) out.push_back(cols - p[i]);
  return Partition(std::move(out));
}

// Fat staircase of alpha = (a_1,...,a_n): the partition with a_i parts equal
// to i for every i, written largest part first.
inline Partition fat_staircase(const Composition& alpha) {
  if (alpha.empty()) throw domain_error("fat staircase needs a nonempty composition");
  int n = alpha.length();
  int64_t boxes = 0;
  for (int i = 0; i < n; ++i)
    boxes = detail::checked_add(boxes, detail::checked_mul(i + 1, alpha[i]));
  if (boxes > kMaxBoxes) throw domain_error("diagram too large");
  std::vector<int> parts;
  parts.reserve(static_cast<size_t>(alpha.size()));
  for (int v = n; v >= 1; --v)
    for (int r = 0; r < alpha[v - 1]; ++r) parts.push_back(v);
  return Partition(std::move(parts));
}

// Recovers the multiplicity composition alpha from a fat staircase partition:
// alpha_i = number of parts equal to i.  Returns nullopt unless every value
// 1..p[0] occurs at least once (the empty partition does not qualify).
inline std::optional<Composition> as_fat_staircase(const Partition& p) {
  if (p.empty()) return std::nullopt;
  int n = p[0];
  std::vector<int> mult(static_cast<size_t>(n), 0);
  for (int i = 0; i < p.length(); ++i) mult[static_cast<size_t>(p[i] - 1)]++;
  for (int m : mult)
    if (m == 0) return std::nullopt;
  return Composition(std::move(mult));
}

// Composition whose fat staircase is the rectangle complement of
// fat_staircase(alpha) inside (w ^ |alpha|).  Only w = n and w = n + 1 give a
// fat staircase back, so other widths are rejected.
inline Composition complement_composition(const Composition& alpha, int w) {
  int n = alpha.length();
  if (n == 0) throw domain_error("empty composition");
  std::vector<int> out;
  if (w == n + 1) {
    for (int i = n - 1; i >= 0; --i) out.push_back(alpha[i]);
  } else if (w == n) {
    if (n == 1) throw domain_error("width n complement needs at least two parts");
    for (int i = n - 2; i >= 0; --i) out.push_back(alpha[i]);
  } else {
    throw domain_error("complement width must be n or n+1");
  }
  return Composition(std::move(out));
}

// Values that may appear in the first foundation row of a staircase with a
// foundation attached at offset k: 1 + each partial sum of alpha read from its
// last part, plus the value 1 when k > 0.  The value 1 can repeat up to k
// times in such a row; every other listed value appears at most once.
inline std::vector<int> admissible_row_values(const Composition& alpha, int k) {
  if (k < 0) throw domain_error("offset k must be nonnegative");
  std::vector<int> out;
  if (k > 0) out.push_back(1);
  int64_t sum = 0;
  for (int i = alpha.length() - 1; i >= 0; --i) {
    sum += alpha[i];
    out.push_back(static_cast<int>(sum + 1));
  }
  return out;
}

}  // namespace skewschur
