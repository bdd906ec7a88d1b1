#pragma once

// Partitions in a box and under the staircase of the k x (n-k) triangle.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "stringy/polynomial.hpp"
#include "stringy/qbinomial.hpp"
#include "stringy/stringy.hpp"

namespace stringy {

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 1; i < parts_.size(); ++i) {
      if (parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (zero-based); zero past the length.
  std::uint32_t operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  std::uint64_t size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0}); }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> parts_;
};

namespace detail {

// Depth-first, so the output is in lexicographic order of the part sequence.
// row_bound(i) caps the zero-based row i.
template <typename RowBound, typename Visitor>
void enumerate_bounded(std::size_t rows, RowBound&& row_bound, Visitor&& visit) {
  std::vector<std::uint32_t> parts;
  parts.reserve(rows);
  std::function<void()> recurse = [&] {
    visit(parts);
    const std::size_t i = parts.size();
    if (i == rows) return;
    std::uint32_t cap = row_bound(i);
    if (i > 0 && parts.back() < cap) cap = parts.back();
    for (std::uint32_t p = 1; p <= cap; ++p) {
      parts.push_back(p);
      recurse();
      parts.pop_back();
    }
  };
  recurse();
}

}  // namespace detail

/// All partitions with at most `rows` parts, each at most `cols`.
inline std::vector<Partition> enumerate_box(std::uint32_t rows, std::uint32_t cols) {
  std::vector<Partition> out;
  detail::enumerate_bounded(rows, [cols](std::size_t) { return cols; },
                            [&](const std::vector<std::uint32_t>& p) { out.emplace_back(p); });
  return out;
}

/// Largest admissible part in row i (one-based) of the staircase for Gr(k, n):
/// floor((n-k)(k-i)/k), i.e. the cell's outer corner stays on or below the hypotenuse.
inline std::uint32_t staircase_row_bound(const GrassmannianSpec& spec, std::uint32_t i) {
  const std::uint64_t k = spec.k();
  const std::uint64_t width = spec.n() - spec.k();
  return static_cast<std::uint32_t>(width * (k - i) / k);
}

/// Streams the staircase partitions for Gr(k, n) to `visit`.
template <typename Visitor>
void for_each_staircase(const GrassmannianSpec& spec, Visitor&& visit) {
  detail::enumerate_bounded(
      spec.k(), [&spec](std::size_t i) { return staircase_row_bound(spec, static_cast<std::uint32_t>(i + 1)); },
      [&](const std::vector<std::uint32_t>& p) { visit(Partition(p)); });
}

inline std::vector<Partition> enumerate_staircase(const GrassmannianSpec& spec) {
  std::vector<Partition> out;
  for_each_staircase(spec, [&](Partition p) { out.push_back(std::move(p)); });
  return out;
}

inline std::uint64_t count_staircase(const GrassmannianSpec& spec) {
  std::uint64_t count = 0;
  detail::enumerate_bounded(
      spec.k(), [&spec](std::size_t i) { return staircase_row_bound(spec, static_cast<std::uint32_t>(i + 1)); },
      [&](const std::vector<std::uint32_t>&) { ++count; });
  return count;
}

struct EulerCountCheck {
  BigRational stringy_euler;
  std::uint64_t staircase_count = 0;
  bool agree = false;
};

/// Compares e_st of the Grassmannian cone with the number of staircase partitions.
/// The two coincide whenever gcd(k, n) = 1; outside that regime only the verdict is reported.
inline EulerCountCheck stringy_euler_count_check(const GrassmannianSpec& spec) {
  EulerCountCheck r;
  r.stringy_euler = stringy_euler(stringy_cone_grassmannian(spec));
  r.staircase_count = count_staircase(spec);
  r.agree = r.stringy_euler == BigRational(r.staircase_count);
  return r;
}

}  // namespace stringy
