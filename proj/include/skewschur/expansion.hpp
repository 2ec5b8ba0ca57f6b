#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "skewschur/tableau.hpp"

namespace skewschur {

// Finite integer combination of Schur functions, kept homogeneous: every
// indexing partition has the same size.  Zero coefficients are never stored
// and terms iterate in descending lexicographic order of the partition.
class SchurExpansion {
 public:
  using Terms = std::map<Partition, int64_t, LexDesc>;

  SchurExpansion() = default;

  void add_term(const Partition& p, int64_t c) {
    if (c == 0) return;
    if (!terms_.empty() && p.size() != terms_.begin()->first.size())
      throw domain_error("mixed degrees in Schur expansion");
    auto [it, fresh] = terms_.try_emplace(p, 0);
    it->second = detail::checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  int64_t coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  std::optional<int64_t> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.size();
  }

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  Terms terms_;
};

inline SchurExpansion operator+(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion out = a;
  for (const auto& [p, c] : b.terms()) out.add_term(p, c);
  return out;
}

inline SchurExpansion operator-(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion out = a;
  for (const auto& [p, c] : b.terms()) out.add_term(p, detail::checked_mul(c, -1));
  return out;
}

inline SchurExpansion operator*(int64_t s, const SchurExpansion& f) {
  SchurExpansion out;
  for (const auto& [p, c] : f.terms()) out.add_term(p, detail::checked_mul(s, c));
  return out;
}

// True when no stored coefficient is negative (f >= 0 in the Schur basis).
inline bool is_schur_positive(const SchurExpansion& f) {
  for (const auto& [p, c] : f.terms())
    if (c < 0) return false;
  return true;
}

// `1*[3,2] + 2*[2,2,1]`; the zero expansion prints as `0` and the empty
// partition as `[]`.
inline std::string to_text(const SchurExpansion& f) {
  if (f.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : f.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    os << (c < 0 ? -c : c) << '*' << p;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const SchurExpansion& f) {
  return os << to_text(f);
}

// Schur expansion of the skew Schur function of d: the coefficient of nu
// counts the lattice semistandard fillings of d with content nu.
inline SchurExpansion skew_schur(const SkewDiagram& d) {
  SchurExpansion out;
  enumerate_lattice_ssyt(d, [&](const Tableau& t) {
    out.add_term(Partition(content(t)), 1);
    return true;
  });
  return out;
}

namespace detail {

template <typename Fn>
void for_each_product_shape(std::vector<int>& parts, int i, int64_t left, int maxpart,
                            int maxrows, const Partition& floor, Fn& fn) {
  if (left == 0) {
    for (size_t j = static_cast<size_t>(i); j < parts.size(); ++j)
      if (floor[static_cast<int>(j)] > 0) return;
    fn(Partition(std::vector<int>(parts.begin(), parts.begin() + i)));
    return;
  }
  if (i == maxrows) return;
  int hi = std::min<int64_t>(maxpart, left);
  for (int v = hi; v >= std::max(1, floor[i]); --v) {
    parts[static_cast<size_t>(i)] = v;
    for_each_product_shape(parts, i + 1, left - v, v, maxrows, floor, fn);
  }
}

}  // namespace detail

// s_mu * s_nu in the Schur basis.  Candidate result partitions range over the
// bounding box with l(mu) + l(nu) rows and mu_1 + nu_1 columns and must
// contain both factors; each coefficient is a targeted lattice-filling count.
inline SchurExpansion schur_product(const Partition& mu, const Partition& nu) {
  // Fillings of lambda/shape with the smaller partition as content are
  // cheaper, so put the larger factor inside.
  const Partition& big = mu.size() >= nu.size() ? mu : nu;
  const Partition& small = mu.size() >= nu.size() ? nu : mu;
  int maxrows = mu.length() + nu.length();
  int maxcols = mu[0] + nu[0];
  std::vector<int> floor_parts;
  for (int i = 0; i < maxrows; ++i) floor_parts.push_back(std::max(mu[i], nu[i]));
  Partition floor(std::move(floor_parts));
  SchurExpansion out;
  std::vector<int> scratch(static_cast<size_t>(maxrows), 0);
  auto handle = [&](const Partition& lambda) {
    int64_t c = lr_coefficient(lambda, big, small);
    if (c != 0) out.add_term(lambda, c);
  };
  int64_t total = mu.size() + nu.size();
  if (total == 0) {
    out.add_term(Partition(), 1);
    return out;
  }
  detail::for_each_product_shape(scratch, 0, total, maxcols, maxrows, floor, handle);
  return out;
}

inline SchurExpansion operator*(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion out;
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) {
      int64_t scale = detail::checked_mul(cp, cq);
      SchurExpansion pq = schur_product(p, q);
      for (const auto& [r, cr] : pq.terms()) out.add_term(r, detail::checked_mul(scale, cr));
    }
  return out;
}

// Keeps only the terms fitting inside the rows x cols rectangle and replaces
// each by its rectangle complement.
inline SchurExpansion truncated_complement(const SchurExpansion& f, int rows, int cols) {
  SchurExpansion out;
  for (const auto& [p, c] : f.terms()) {
    if (p.length() > rows || p[0] > cols) continue;
    out.add_term(complement_in_rectangle(p, rows, cols), c);
  }
  return out;
}

namespace detail {

template <typename Fn>
void for_each_horizontal_strip(const Partition& base, std::vector<int>& parts, int i,
                               int64_t left, Fn& fn) {
  int rows = base.length() + 1;
  if (i == rows) {
    if (left == 0) fn(Partition(std::vector<int>(parts)));
    return;
  }
  // Row i grows from base[i] up to base[i-1] (unbounded in the first row);
  // the cap keeps the added boxes in distinct columns.
  int64_t hi = i == 0 ? static_cast<int64_t>(base[0]) + left
                      : std::min<int64_t>(base[i - 1], base[i] + left);
  for (int v = base[i]; v <= hi; ++v) {
    parts[static_cast<size_t>(i)] = v;
    for_each_horizontal_strip(base, parts, i + 1, left - (v - base[i]), fn);
  }
}

template <typename Fn>
void for_each_vertical_strip(const Partition& base, std::vector<int>& parts, int i, int64_t left,
                             Fn& fn) {
  if (i == static_cast<int>(parts.size())) {
    if (left == 0) fn(Partition(std::vector<int>(parts)));
    return;
  }
  for (int add = 0; add <= (left > 0 ? 1 : 0); ++add) {
    int v = base[i] + add;
    if (i > 0 && v > parts[static_cast<size_t>(i - 1)]) continue;
    parts[static_cast<size_t>(i)] = v;
    for_each_vertical_strip(base, parts, i + 1, left - add, fn);
  }
}

}  // namespace detail

// s_(m) * s_p by direct enumeration of horizontal m-strips over p.  This is
// an independent route from lr_coefficient and is cross-checked against it.
inline SchurExpansion pieri_row(const Partition& p, int m) {
  if (m < 0) throw domain_error("strip size must be nonnegative");
  SchurExpansion out;
  std::vector<int> scratch(static_cast<size_t>(p.length()) + 1, 0);
  auto emit = [&](const Partition& q) { out.add_term(q, 1); };
  detail::for_each_horizontal_strip(p, scratch, 0, m, emit);
  return out;
}

// s_(1^m) * s_p by direct enumeration of vertical m-strips over p.
inline SchurExpansion pieri_col(const Partition& p, int m) {
  if (m < 0) throw domain_error("strip size must be nonnegative");
  SchurExpansion out;
  std::vector<int> scratch(static_cast<size_t>(p.length() + m), 0);
  auto emit = [&](const Partition& q) { out.add_term(q, 1); };
  detail::for_each_vertical_strip(p, scratch, 0, m, emit);
  return out;
}

}  // namespace skewschur
