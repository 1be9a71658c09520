#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "partctl/arith.hpp"

using namespace partctl;

namespace {

// Straight from the definition, every d scanned.
std::vector<int> naive_t(int limit) {
  std::vector<int> t(limit + 1, 0);
  t[1] = 0;
  if (limit >= 2) t[2] = 1;
  if (limit >= 3) t[3] = 2;
  for (int n = 4; n <= limit; ++n) {
    int best = 1 << 30;
    for (int d = 1; d <= n - 1; ++d) best = std::min(best, d + t[(n - 1 + d - 1) / d]);
    t[n] = best;
  }
  return t;
}

const TTable& small_table() {
  static const TTable table(200'000);
  return table;
}

}  // namespace

TEST_CASE("t starts 0, 1, 2 and matches the hand-checked preimages") {
  const TTable& t = small_table();
  CHECK(t.value(1) == 0);
  CHECK(t.value(2) == 1);
  CHECK(t.value(3) == 2);
  CHECK(t.value(11) == 5);
  CHECK(t.value(16) == 6);
  const auto iv = t.intervals();
  CHECK(iv.preimage(0) == Interval{1, 1, true});
  CHECK(iv.preimage(1) == Interval{2, 2, true});
  CHECK(iv.preimage(2) == Interval{3, 3, true});
  CHECK(iv.preimage(3) == Interval{4, 5, true});
  CHECK(iv.preimage(4) == Interval{6, 7, true});
  CHECK(iv.preimage(5) == Interval{8, 11, true});
  CHECK(iv.preimage(6) == Interval{12, 16, true});
  CHECK(iv.preimage(7) == Interval{17, 23, true});
  CHECK_THROWS_AS(t.value(0), Error);
  CHECK_THROWS_AS(t.value(200'001), Error);
}

TEST_CASE("t agrees with the unshortened definition") {
  const auto naive = naive_t(5000);
  const TTable& t = small_table();
  for (int n = 1; n <= 5000; ++n) {
    REQUIRE(t.value(n) == naive[n]);
    if (n >= 4) {
      const int d = t.argmin(n);
      CHECK(d + t.value((n - 1 + d - 1) / d) == t.value(n));
    }
  }
}

TEST_CASE("t is monotone") {
  const TTable& t = small_table();
  for (int n = 2; n <= t.capacity(); ++n) REQUIRE(t.value(n) >= t.value(n - 1));
}

TEST_CASE("the step-3 recurrence holds from n = 24 on, and fails at 11 and 23") {
  const TTable& t = small_table();
  std::vector<int> misses;
  for (int n = 11; n <= t.capacity(); ++n)
    if (t.value(n) != 3 + t.value((n + 1) / 3)) misses.push_back(n);
  CHECK(misses == std::vector<int>{11, 23});
  // t(11) = 2 + t(5) = 5 while 3 + t(4) = 6.
  CHECK(t.value(11) == 2 + t.value(5));
  CHECK(3 + t.value(4) == 6);
}

TEST_CASE("anchor family n = 10 * sum 3^i grows by exactly 3 per step after the first") {
  const TTable& t = small_table();
  std::int64_t sum = 1, power = 1;
  int prev = -1;
  for (int ell = 0; 10 * sum <= t.capacity(); ++ell) {
    const int n = static_cast<int>(10 * sum);
    if (ell == 0) CHECK(t.value(n) == 5);
    if (ell >= 1) CHECK(t.value(n) == t.value(10) + 3 * ell + 1);
    if (ell >= 2) CHECK(t.value(n) == prev + 3);
    prev = t.value(n);
    power *= 3;
    sum += power;
  }
}

TEST_CASE("preimage intervals match the closed forms") {
  CHECK(t_preimage_closed_form(8) == Interval{24, 34, true});
  CHECK(t_preimage_closed_form(9) == Interval{35, 49, true});
  CHECK(t_preimage_closed_form(10) == Interval{50, 70, true});
  CHECK_THROWS_AS(t_preimage_closed_form(7), Error);

  const TTable& t = small_table();
  const auto iv = t.intervals();
  for (int h = 8; h <= iv.max_h(); ++h) {
    const Interval got = iv.preimage(h);
    const Interval want = t_preimage_closed_form(h);
    CHECK(got.lo == want.lo);
    if (got.complete) CHECK(got.hi == want.hi);
  }
  // Consecutive, disjoint, covering.
  std::int64_t next = 1;
  for (const Interval& x : iv.all()) {
    CHECK(x.lo == next);
    CHECK(x.hi >= x.lo);
    next = x.hi + 1;
  }
  CHECK(next == t.capacity() + 1);
  CHECK_FALSE(iv.all().back().complete);
}

TEST_CASE("empirical constant bounds 3 log3 n - t(n)") {
  const TTable& t = small_table();
  const double c = t.empirical_constant();
  for (int n = 1; n <= t.capacity(); n += 97)
    CHECK(t.value(n) >= 3 * std::log(n) / std::log(3.0) - c - 1e-9);
  CHECK(c > 0);
  CHECK(c < 10);
}

TEST_CASE("count_partitions against enumeration") {
  CHECK(count_partitions(6, 3) == 3);
  CHECK(count_partitions(2, 2, true) == 2);
  CHECK(count_partitions(0, 2, true) == 1);
  CHECK(count_partitions(0, 3) == 0);
  for (int n = 1; n <= 40; ++n) CHECK(count_partitions(n, 1) == 1);
  for (int n = 0; n <= 40; ++n)
    for (int k = 1; k <= 6; ++k) {
      CHECK(count_partitions(n, k) == oracle::partitions_into(n, k));
      CHECK(count_partitions(n, k, true) == count_partitions(n + k, k));
    }
  // Beyond 64 bits.
  CHECK(count_partitions(2000, 12) > BigInt("18446744073709551616"));
}

TEST_CASE("binomial and the asymptotic estimate") {
  CHECK(binomial(99, 1) == 99);
  CHECK(binomial(99, 2) == 4851);
  CHECK(binomial(5, 7) == 0);
  CHECK(erdos_lehner_estimate(100, 2) == doctest::Approx(49.5));
  CHECK(erdos_lehner_estimate(100, 3) == doctest::Approx(808.5));
  CHECK(erdos_lehner_estimate(17, 1) == doctest::Approx(1.0));
  CHECK(count_partitions(100, 2) == 50);
  CHECK(count_partitions(100, 3) == 833);
}
