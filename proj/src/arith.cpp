#include "partctl/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace partctl {

TTable::TTable(int capacity) {
  if (capacity < 1) throw Error(Errc::OutOfRange, "table capacity must be >= 1");
  values_.assign(capacity + 1, 0);
  argmin_.assign(capacity + 1, 0);
  const int base[] = {0, 0, 1, 2};
  for (int n = 1; n <= std::min(capacity, 3); ++n) values_[n] = static_cast<std::uint8_t>(base[n]);
  for (int n = 4; n <= capacity; ++n) {
    int best = n;  // d = n-1 gives n-1 + t(1)
    std::uint32_t best_d = 0;
    for (int d = 1; d < n && d < best; ++d) {
      const int c = d + values_[(n - 1 + d - 1) / d];
      if (c < best) {
        best = c;
        best_d = static_cast<std::uint32_t>(d);
      }
    }
    values_[n] = static_cast<std::uint8_t>(best);
    argmin_[n] = best_d;
  }
}

int TTable::value(int n) const {
  if (n < 1 || n > capacity())
    throw Error(Errc::OutOfRange, "t(" + std::to_string(n) + ") outside table 1.." +
                                      std::to_string(capacity()));
  return values_[n];
}

int TTable::argmin(int n) const {
  value(n);
  return static_cast<int>(argmin_[n]);
}

double TTable::empirical_constant() const {
  double c = 0.0;
  for (int n = 1; n <= capacity(); ++n)
    c = std::max(c, 3.0 * std::log(static_cast<double>(n)) / std::log(3.0) - values_[n]);
  return c;
}

IntervalTable TTable::intervals() const {
  std::vector<Interval> by_h;
  for (int n = 1; n <= capacity(); ++n) {
    const int h = values_[n];
    if (h >= static_cast<int>(by_h.size())) {
      // Monotonicity makes each new value exactly one above the last.
      if (h != static_cast<int>(by_h.size()))
        throw Error(Errc::OutOfRange, "t skips a value at n=" + std::to_string(n));
      by_h.push_back({n, n, true});
    } else {
      by_h[h].hi = n;
    }
  }
  if (!by_h.empty()) by_h.back().complete = false;
  return IntervalTable(std::move(by_h));
}

Interval IntervalTable::preimage(int h) const {
  if (h < 0 || h > max_h())
    throw Error(Errc::OutOfRange, "h=" + std::to_string(h) + " beyond table");
  return by_h_[h];
}

Interval t_preimage_closed_form(int h) {
  if (h < 8 || h > 110) throw Error(Errc::OutOfRange, "closed form needs 8 <= h <= 110");
  auto p3 = [](int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
  };
  const int r = ((h % 3) + 3) % 3;
  if (r == 2) {  // h = 3k-1
    const int k = (h + 1) / 3;
    return {(p3(k) - 1) / 2 + p3(k - 1) + p3(k - 3) + 1,
            (p3(k + 1) - 1) / 2 - p3(k - 1) + p3(k - 2), true};
  }
  if (r == 0) {  // h = 3k
    const int k = h / 3;
    return {(p3(k + 1) - 1) / 2 - p3(k - 1) + p3(k - 2) + 1, (p3(k + 1) - 1) / 2 + p3(k - 1),
            true};
  }
  const int k = (h - 1) / 3;  // h = 3k+1
  return {(p3(k + 1) - 1) / 2 + p3(k - 1) + 1, (p3(k + 1) - 1) / 2 + p3(k) + p3(k - 2), true};
}

BigInt count_partitions(std::int64_t n, int k, bool allow_zero) {
  if (n < 0 || k < 0) return 0;
  if (allow_zero) return count_partitions(n + k, k, false);
  if (k == 0) return n == 0 ? 1 : 0;
  if (n < k) return 0;
  // p[j][i]: partitions of i into exactly j positive parts.
  //   p[j][i] = p[j-1][i-1] + p[j][i-j]
  std::vector<std::vector<BigInt>> p(k + 1, std::vector<BigInt>(n + 1, 0));
  p[0][0] = 1;
  for (int j = 1; j <= k; ++j)
    for (std::int64_t i = j; i <= n; ++i) p[j][i] = p[j - 1][i - 1] + p[j][i - j];
  return p[k][n];
}

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

double erdos_lehner_estimate(std::int64_t n, int k) {
  if (k < 1 || n < k) throw Error(Errc::OutOfRange, "need 1 <= k <= n");
  BigInt fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  using Float = boost::multiprecision::cpp_bin_float_50;
  Float ratio = Float(binomial(n - 1, k - 1)) / Float(fact);
  return ratio.convert_to<double>();
}

}  // namespace partctl
