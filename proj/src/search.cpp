#include "qp/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

#include "fast_sigma.hpp"
#include "qp/divisor_functions.hpp"
#include "qp/error.hpp"
#include "qp/primes.hpp"
#include "qp/theorems.hpp"

namespace qp {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool in_sector(int d, std::int64_t a, std::int64_t b) {
  if (d == -1 || d == -3) return a > 0 && b >= 0;
  return b > 0 || (b == 0 && a > 0);
}

void check_bound(std::uint64_t bound) {
  if (bound < 1) throw Error(ErrorKind::PreconditionFailed, "norm bound must be >= 1");
  if (bound > kMaxEnumerationBound) {
    throw Error(ErrorKind::TooLarge, "norm bound above 10^13 is not supported");
  }
}

struct Shell {
  std::vector<CanonicalPoint> hits;
  std::uint64_t scanned = 0;
};

SearchReport run_scan(RingId ring, long n, long t, std::uint64_t bound, bool odd_only,
                      const SearchOptions& opts) {
  check_bound(bound);
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorKind::OddExponent, "search needs a positive even n");
  }
  if (t < 2) throw Error(ErrorKind::PreconditionFailed, "search needs t >= 2");

  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t shell_count = std::clamp<std::uint64_t>(bound / 4096, 1, 512);
  std::vector<Shell> shells(shell_count);
  const detail::SmallDelta2 delta2(ring.d(), bound);

  auto evaluate = [&](const CanonicalPoint& p) {
    if (n == 2) return delta2(p.a, p.b, p.norm) == detail::u128(t) * p.norm;
    return is_powerfully_perfect(n, t, QuadInt(ring, p.a, p.b));
  };

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::uint64_t i = next++; i < shell_count; i = next++) {
        const std::uint64_t lo = bound * i / shell_count;
        const std::uint64_t hi = bound * (i + 1) / shell_count;
        Shell& shell = shells[i];
        for (const CanonicalPoint& p : canonical_points(ring, lo, hi)) {
          if (odd_only && p.norm % 2 == 0) continue;
          ++shell.scanned;
          if (evaluate(p)) shell.hits.push_back(p);
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  unsigned threads = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(shell_count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SearchReport report{ring, n, t, bound, odd_only, {}, 0, 0, {}};
  for (const Shell& shell : shells) {
    report.elements_scanned += shell.scanned;
    for (const CanonicalPoint& p : shell.hits) report.hits.emplace_back(ring, p.a, p.b);
  }
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

}  // namespace

std::vector<CanonicalPoint> canonical_points(RingId ring, std::uint64_t lo, std::uint64_t hi) {
  check_bound(hi);
  std::vector<CanonicalPoint> out;
  if (hi <= lo) return out;
  const int d = ring.d();
  const bool half = ring.half_integer();
  const auto absd = static_cast<std::uint64_t>(-d);
  // Half-integer basis: 4 N = u^2 + |d| b^2 with u = 2a + b.
  const std::uint64_t top = half ? 4 * hi : hi;
  const std::uint64_t floor_norm = half ? 4 * lo : lo;
  const std::uint64_t bmax = isqrt(top / absd);

  // The sector never contains b < 0.
  for (std::uint64_t ub = 0; ub <= bmax; ++ub) {
    const std::uint64_t sub = absd * ub * ub;
    if (sub > top) break;
    const auto umax = static_cast<std::int64_t>(isqrt(top - sub));
    const std::int64_t inner =
        floor_norm >= sub ? static_cast<std::int64_t>(isqrt(floor_norm - sub)) : -1;
    const auto b = static_cast<std::int64_t>(ub);
    for (std::int64_t u = -umax; u <= umax; ++u) {
      if (u >= -inner && u <= inner) {
        u = inner;
        continue;
      }
      std::int64_t a = u;
      if (half) {
        if (((u - b) & 1) != 0) continue;
        a = (u - b) / 2;
      }
      if (!in_sector(d, a, b)) continue;
      const std::uint64_t twice = static_cast<std::uint64_t>(u * u) + sub;
      out.push_back({half ? twice / 4 : twice, a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuadInt> enumerate_canonical(RingId ring, std::uint64_t bound) {
  check_bound(bound);
  std::vector<QuadInt> out;
  for (const CanonicalPoint& p : canonical_points(ring, 0, bound)) out.emplace_back(ring, p.a, p.b);
  return out;
}

SearchReport search_perfect(RingId ring, long n, long t, std::uint64_t bound,
                            const SearchOptions& opts) {
  return run_scan(ring, n, t, bound, false, opts);
}

SearchReport search_odd_norm(RingId ring, std::uint64_t bound, const SearchOptions& opts) {
  SearchReport report = run_scan(ring, 2, 2, bound, true, opts);
  for (const QuadInt& z : report.hits) {
    report.verifications.push_back(check_odd_structure(z));
    if (prime_count_threshold(ring)) report.verifications.push_back(check_prime_count(z));
  }
  return report;
}

}  // namespace qp
