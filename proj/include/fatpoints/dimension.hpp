#pragma once

#include "fatpoints/reduction.hpp"

namespace fatpoints {

/// Binomial coefficient C(x, k) evaluated as a polynomial in x, i.e.
/// x(x-1)...(x-k+1)/k!, defined for every integer x.  In particular
/// C(-1, 2) = 1.  Evaluating the binomials polynomially is what makes the
/// plane Euler characteristic invariant under the full Weyl action.
Int binomial_poly(const Int& x, unsigned k);

/// Euler characteristic C(d+n, n) - sum_i C(m_i + n - 1, n).
Int chi(const DivisorClass& d);

/// How firmly the computed dimension is established.
enum class Basis {
  Unconditional,  // decided by the h0-preserving reduction alone
  ProvenRange,    // covered by the proven cases of the dimension formula
  Conjectural,
};

const char* to_string(Basis b);

struct DimensionResult {
  Int h0;        // projective dimension + 1; 0 for empty systems
  Int chi;       // Euler characteristic of the input class
  Int expected;  // max(chi, 0)
  Basis basis;
  DivisorClass reduced;  // class the dimension was finally read off from
};

/// Dimension of a plane linear system: standardize, then read off
/// max(chi, 0) from the standard class (standard classes are non-special).
/// NotEffective reductions give 0 unconditionally.
DimensionResult dim2(const DivisorClass& d);

/// Restriction of an n = 3 class to a smooth quadric through the first nine
/// points, expressed as a plane class with ten points:
/// (2d - m_1; d - m_1, d - m_1, m_2, ..., m_9).  The multiplicities are
/// sorted descending, and zero-padded to nine, before restricting.
DivisorClass restrict_to_quadric(const DivisorClass& d);

/// Euler characteristic of restrict_to_quadric(d), computed directly as
/// (d+1)^2 - sum_{i<=9} m_i (m_i + 1) / 2.  Requires a standard class.
Int chi_on_quadric(const DivisorClass& d);

struct QuadResult {
  DivisorClass cls;
  ReductionStatus status;  // Standard or NotEffective
};

/// Repeatedly standardize and, while chi_on_quadric <= 0, subtract the
/// quadric class (degree 2, one through each of the first nine points);
/// subtracting it does not change h0 in that regime.  Stops when the
/// standard class has chi_on_quadric > 0, or when the reduction certifies
/// an empty system.
QuadResult quad_reduce(const DivisorClass& d);

/// Dimension count for a standard n = 3 class with chi_on_quadric > 0:
/// C(d+3, 3) - sum_i C(m_i + 2, 3) + sum over pairs with m_i + m_j > d + 1
/// of C(m_i + m_j - d + 1, 3).  The pair terms correct for the doubled
/// lines through two fat points.  May be negative.
Int corrected_h0_formula(const DivisorClass& d);

/// A standard class with chi_on_quadric > 0 is special exactly when
/// d < m_1 + m_2 - 1.
bool is_special3(const DivisorClass& d);

/// Dimension of an n = 3 linear system: standardize, run quad_reduce, then
/// apply corrected_h0_formula, clamped at zero.
DimensionResult dim3(const DivisorClass& d);

}  // namespace fatpoints
