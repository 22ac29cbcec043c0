#pragma once

#include <cstdint>
#include <vector>

#include "qp/report.hpp"
#include "qp/rings.hpp"

namespace qp {

/// Largest norm bound the lattice enumeration accepts.
inline constexpr std::uint64_t kMaxEnumerationBound = 10'000'000'000'000ULL;

struct CanonicalPoint {
  std::uint64_t norm;
  std::int64_t a;
  std::int64_t b;

  friend auto operator<=>(const CanonicalPoint&, const CanonicalPoint&) = default;
};

/// Sector-canonical lattice points with lo < N <= hi, sorted by (norm, a, b).
std::vector<CanonicalPoint> canonical_points(RingId ring, std::uint64_t lo, std::uint64_t hi);

/// Every canonical z with 1 <= N(z) <= bound, once, in (norm, a, b) order.
std::vector<QuadInt> enumerate_canonical(RingId ring, std::uint64_t bound);

struct SearchReport {
  RingId ring;
  long n;
  long t;
  std::uint64_t norm_bound;
  bool odd_norm_only = false;
  std::vector<QuadInt> hits;  // canonical, (norm, a, b) order
  std::uint64_t elements_scanned = 0;
  std::int64_t wall_time_ms = 0;
  // Structure checks run on odd-norm hits (odd-norm scans only).
  std::vector<VerifierReport> verifications;
};

struct SearchOptions {
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Exhaustive scan for canonical z with N(z) <= bound and I_n(z) = t.
/// Norm shells are processed in parallel and merged in order, so the output
/// never depends on the thread count.
SearchReport search_perfect(RingId ring, long n, long t, std::uint64_t bound,
                            const SearchOptions& opts = {});

/// Scan of odd N(z) <= bound for I_2(z) = 2. Every hit is passed through the
/// odd-norm shape check and, for d in {-1, -2, -7}, the prime-count threshold.
SearchReport search_odd_norm(RingId ring, std::uint64_t bound, const SearchOptions& opts = {});

}  // namespace qp
