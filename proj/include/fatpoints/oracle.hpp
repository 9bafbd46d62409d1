#pragma once

#include <cstdint>

#include "fatpoints/lattice.hpp"

namespace fatpoints {

/// A fat-point interpolation problem over a prime field: degree-d forms in
/// P^n vanishing to order m_i at r random points of one affine chart.
/// h0 is estimated as (number of monomials) - (rank of the condition
/// matrix); the minimum over independent trials is reported, since any
/// accidental point degeneration can only lower the rank.
struct InterpolationProblem {
  int ambient_dim = 2;
  std::int64_t degree = 0;             // >= 0
  std::vector<std::int64_t> mults;     // each >= 1
  std::uint32_t prime = 2147483647u;   // must exceed degree and every m_i
  std::uint64_t seed = 12345;
  int trials = 3;                      // trial k uses seed + k
};

/// Deterministic for fixed (prime, seed, trials).  Throws when the prime is
/// too small, or the matrix would exceed the 4000 x 4000 cap.
std::int64_t h0_interpolation(const InterpolationProblem& p);

/// Problem for a divisor class: multiplicities <= 0 are dropped (they
/// impose nothing).  Requires degree >= 0.
InterpolationProblem problem_for(const DivisorClass& d,
                                 std::uint32_t prime = 2147483647u,
                                 std::uint64_t seed = 12345, int trials = 3);

struct VerifyReport {
  Int oracle_h0;
  Int algorithm_h0;
  bool agree;
  DivisorClass standardized;
};

/// Cross-check dim2/dim3 against the interpolation oracle.  The oracle runs
/// on the standardized class: the reduction chain preserves h0 exactly and
/// shrinks the matrices to a workable size.  A standardized class of
/// negative degree has no sections, no sampling needed.
VerifyReport verify_class(const DivisorClass& d,
                          std::uint32_t prime = 2147483647u,
                          std::uint64_t seed = 12345, int trials = 3);

}  // namespace fatpoints
