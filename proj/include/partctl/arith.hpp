#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "partctl/error.hpp"

namespace partctl {

using BigInt = boost::multiprecision::cpp_int;

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  // False when the interval runs into the table capacity, so hi is only a
  // lower estimate of the true upper end.
  bool complete = true;

  friend bool operator==(const Interval&, const Interval&) = default;
};

class IntervalTable;

// The sequence t(1)=0, t(2)=1, t(3)=2,
//   t(n) = min_{d>=1} d + t(ceil((n-1)/d))   for n >= 4,
// tabulated for 1..capacity. The minimization scans every d, stopping once
// d alone reaches the running minimum.
class TTable {
 public:
  static constexpr int kDefaultCapacity = 1'000'000;

  explicit TTable(int capacity = kDefaultCapacity);

  int capacity() const noexcept { return static_cast<int>(values_.size()) - 1; }

  // Throws OutOfRange outside 1..capacity.
  int value(int n) const;
  // Smallest minimizing d (0 for n <= 3).
  int argmin(int n) const;

  // max_n (3 log_3 n - t(n)): the smallest C with t(n) >= 3 log_3 n - C on
  // the whole table.
  double empirical_constant() const;

  IntervalTable intervals() const;

 private:
  std::vector<std::uint8_t> values_;  // index 0 unused
  std::vector<std::uint32_t> argmin_;
};

// Preimages t^{-1}(h), consecutive and disjoint, covering [1, capacity].
class IntervalTable {
 public:
  explicit IntervalTable(std::vector<Interval> by_h) : by_h_(std::move(by_h)) {}

  int max_h() const noexcept { return static_cast<int>(by_h_.size()) - 1; }
  // Throws OutOfRange.
  Interval preimage(int h) const;
  std::span<const Interval> all() const noexcept { return by_h_; }

 private:
  std::vector<Interval> by_h_;
};

// Closed forms for t^{-1}(h), h >= 8, split on h mod 3:
//   h = 3k-1: [(3^k-1)/2 + 3^{k-1} + 3^{k-3} + 1, (3^{k+1}-1)/2 - 3^{k-1} + 3^{k-2}]
//   h = 3k:   [(3^{k+1}-1)/2 - 3^{k-1} + 3^{k-2} + 1, (3^{k+1}-1)/2 + 3^{k-1}]
//   h = 3k+1: [(3^{k+1}-1)/2 + 3^{k-1} + 1, (3^{k+1}-1)/2 + 3^k + 3^{k-2}]
// Throws OutOfRange for h < 8 or h > 110.
Interval t_preimage_closed_form(int h);

// Number of multisets of k positive integers summing to n; with
// allow_zero the parts may be zero (equal to the positive count for n+k).
BigInt count_partitions(std::int64_t n, int k, bool allow_zero = false);

BigInt binomial(std::int64_t n, std::int64_t r);

// C(n-1, k-1) / k!.
double erdos_lehner_estimate(std::int64_t n, int k);

}  // namespace partctl
