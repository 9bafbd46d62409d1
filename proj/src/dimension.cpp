#include "fatpoints/dimension.hpp"

#include <algorithm>

namespace fatpoints {

Int binomial_poly(const Int& x, unsigned k) {
  Int num = 1;
  Int fact = 1;
  for (unsigned j = 0; j < k; ++j) {
    num *= x - Int(j);
    fact *= Int(j + 1);
  }
  return num / fact;
}

Int chi(const DivisorClass& d) {
  const int n = d.ambient_dim();
  Int v = binomial_poly(d.degree() + n, static_cast<unsigned>(n));
  for (const Int& m : d.mults())
    v -= binomial_poly(m + n - 1, static_cast<unsigned>(n));
  return v;
}

const char* to_string(Basis b) {
  switch (b) {
    case Basis::Unconditional:
      return "Unconditional";
    case Basis::ProvenRange:
      return "ProvenRange";
    case Basis::Conjectural:
      return "Conjectural";
  }
  return "?";
}

namespace {

Int clamp_nonneg(Int v) { return v < 0 ? Int(0) : v; }

}  // namespace

DimensionResult dim2(const DivisorClass& d) {
  if (d.ambient_dim() != 2)
    throw std::invalid_argument("dim2: ambient dimension must be 2");
  const Int c = chi(d);
  ReductionReport red = standardize(d);
  if (red.status == ReductionStatus::NotEffective) {
    return {0, c, clamp_nonneg(c), Basis::Unconditional, std::move(red.result)};
  }
  Int h = clamp_nonneg(chi(red.result));
  // A standard class of degree zero is the trivial class; its h0 = 1 needs
  // no conjecture.  Everything else relies on standard classes being
  // non-special.
  const Basis b =
      red.result.degree() == 0 ? Basis::Unconditional : Basis::Conjectural;
  return {std::move(h), c, clamp_nonneg(c), b, std::move(red.result)};
}

DivisorClass restrict_to_quadric(const DivisorClass& d) {
  if (d.ambient_dim() != 3)
    throw std::invalid_argument("restrict_to_quadric: ambient dimension must be 3");
  const DivisorClass sorted = sort_desc(d.padded(9)).first;
  const auto& m = sorted.mults();
  const Int& deg = sorted.degree();
  std::vector<Int> z;
  z.reserve(10);
  z.push_back(deg - m[0]);
  z.push_back(deg - m[0]);
  for (std::size_t i = 1; i < 9; ++i) z.push_back(m[i]);
  return DivisorClass(2, 2 * deg - m[0], std::move(z));
}

Int chi_on_quadric(const DivisorClass& d) {
  if (d.ambient_dim() != 3)
    throw std::invalid_argument("chi_on_quadric: ambient dimension must be 3");
  if (!is_standard(d))
    throw std::invalid_argument("chi_on_quadric: class must be standard");
  Int v = (d.degree() + 1) * (d.degree() + 1);
  for (std::size_t i = 0; i < 9; ++i) {
    const Int m = d.mult_or_zero(i);
    v -= m * (m + 1) / 2;
  }
  return v;
}

QuadResult quad_reduce(const DivisorClass& d) {
  if (d.ambient_dim() != 3)
    throw std::invalid_argument("quad_reduce: ambient dimension must be 3");
  DivisorClass cur = d;
  for (;;) {
    ReductionReport red = standardize(cur);
    if (red.status == ReductionStatus::NotEffective)
      return {std::move(red.result), ReductionStatus::NotEffective};
    cur = std::move(red.result);
    if (chi_on_quadric(cur) > 0) return {std::move(cur), ReductionStatus::Standard};
    const DivisorClass p = cur.padded(9);
    std::vector<Int> m = p.mults();
    for (std::size_t i = 0; i < 9; ++i) m[i] -= 1;
    cur = DivisorClass(3, p.degree() - 2, std::move(m));
  }
}

Int corrected_h0_formula(const DivisorClass& d) {
  if (d.ambient_dim() != 3)
    throw std::invalid_argument("corrected_h0_formula: ambient dimension must be 3");
  if (!is_standard(d))
    throw std::invalid_argument("corrected_h0_formula: class must be standard");
  if (chi_on_quadric(d) <= 0)
    throw std::invalid_argument(
        "corrected_h0_formula: chi_on_quadric must be positive");
  const auto& m = d.mults();
  Int v = binomial_poly(d.degree() + 3, 3);
  for (const Int& mi : m) v -= binomial_poly(mi + 2, 3);
  const Int bound = d.degree() + 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const Int s = m[i] + m[j];
      if (s > bound) v += binomial_poly(s - d.degree() + 1, 3);
    }
  }
  return v;
}

bool is_special3(const DivisorClass& d) {
  if (d.ambient_dim() != 3)
    throw std::invalid_argument("is_special3: ambient dimension must be 3");
  if (!is_standard(d))
    throw std::invalid_argument("is_special3: class must be standard");
  if (chi_on_quadric(d) <= 0)
    throw std::invalid_argument("is_special3: chi_on_quadric must be positive");
  return d.degree() < d.mult_or_zero(0) + d.mult_or_zero(1) - 1;
}

namespace {

// The dimension formula is a theorem for at most eight (nonzero)
// multiplicities, and for multiplicities at most four; the reduction chain
// never leaves either range once inside it.
bool in_proven_range(const DivisorClass& standard_cls) {
  std::size_t nonzero = 0;
  Int mx = 0;
  for (const Int& m : standard_cls.mults()) {
    if (m != 0) ++nonzero;
    if (m > mx) mx = m;
  }
  return nonzero <= 8 || mx <= 4;
}

}  // namespace

DimensionResult dim3(const DivisorClass& d) {
  if (d.ambient_dim() != 3)
    throw std::invalid_argument("dim3: ambient dimension must be 3");
  const Int c = chi(d);
  const Int expected = clamp_nonneg(c);
  ReductionReport red = standardize(d);
  if (red.status == ReductionStatus::NotEffective)
    return {0, c, expected, Basis::Unconditional, std::move(red.result)};
  if (red.result.degree() == 0)  // trivial class
    return {1, c, expected, Basis::Unconditional, std::move(red.result)};
  Basis basis =
      in_proven_range(red.result) ? Basis::ProvenRange : Basis::Conjectural;
  QuadResult qr = quad_reduce(red.result);
  if (qr.status == ReductionStatus::NotEffective)
    return {0, c, expected, basis, std::move(qr.cls)};
  Int v = corrected_h0_formula(qr.cls);
  if (v < 0) {
    // Negative formula values are read as empty systems; that reading is
    // not part of the proven statements.
    v = 0;
    basis = Basis::Conjectural;
  }
  return {std::move(v), c, expected, basis, std::move(qr.cls)};
}

}  // namespace fatpoints
