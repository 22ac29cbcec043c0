#pragma once

#include <cstdint>
#include <vector>

namespace qp::detail {

using u128 = unsigned __int128;

// delta_2 on machine-word coordinates, for the search loop. Factors N(z) by
// trial division and reads split-prime exponent pairs off the coordinates:
// p^j | z iff p^j divides both a and b, so min(rho_pi, rho_pibar) is
// min(v_p(a), v_p(b)).
class SmallDelta2 {
 public:
  SmallDelta2(int d, std::uint64_t max_norm);

  u128 operator()(std::int64_t a, std::int64_t b, std::uint64_t norm) const;

 private:
  enum class Kind { Inert, Ramified, Split };
  Kind classify(std::uint64_t p) const;

  int d_;
  std::vector<std::uint32_t> primes_;
};

}  // namespace qp::detail
