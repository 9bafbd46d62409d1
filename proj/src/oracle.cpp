#include "fatpoints/oracle.hpp"

#include <algorithm>
#include <random>

#include "fatpoints/dimension.hpp"

namespace fatpoints {

namespace {

constexpr std::size_t kMatrixCap = 4000;
constexpr std::uint32_t kMersenne31 = 2147483647u;

struct PrimeField {
  std::uint64_t p;
  bool mersenne;

  explicit PrimeField(std::uint32_t prime)
      : p(prime), mersenne(prime == kMersenne31) {}

  // Reduces t < 2^63.
  std::uint64_t reduce(std::uint64_t t) const {
    if (mersenne) {
      t = (t & kMersenne31) + (t >> 31);
      t = (t & kMersenne31) + (t >> 31);
      if (t >= p) t -= p;
      return t;
    }
    return t % p;
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (mersenne) return reduce(a * b);
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

// Row echelon rank over F_p; eliminates below the pivot only.
std::size_t matrix_rank(std::vector<std::uint32_t>& a, std::size_t rows,
                        std::size_t cols, const PrimeField& f) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    }
    const std::uint64_t pivinv = f.inv(a[rank * cols + col]);
    const std::uint32_t* src = &a[rank * cols];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint32_t* dst = &a[i * cols];
      const std::uint64_t lead = dst[col];
      if (!lead) continue;
      const std::uint64_t fac = f.p - f.mul(lead, pivinv);  // dst += fac * src
      dst[col] = 0;
      for (std::size_t j = col + 1; j < cols; ++j) {
        dst[j] = static_cast<std::uint32_t>(f.reduce(dst[j] + fac * src[j]));
      }
    }
    ++rank;
  }
  return rank;
}

// Exponent vectors of all monomials of total degree <= maxdeg in nvars
// variables, in a fixed recursive order.
void gen_exponents(int nvars, std::int64_t maxdeg, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (nvars == 0) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t e = 0; e <= maxdeg; ++e) {
    cur.push_back(static_cast<int>(e));
    gen_exponents(nvars - 1, maxdeg - e, cur, out);
    cur.pop_back();
  }
}

std::int64_t run_trial(const InterpolationProblem& prob,
                       const std::vector<std::vector<int>>& monomials,
                       std::size_t rows, std::uint64_t seed) {
  const PrimeField f(prob.prime);
  const int n = prob.ambient_dim;
  const std::size_t cols = monomials.size();
  std::mt19937_64 rng(seed);

  // Distinct random points of one affine chart.
  std::vector<std::vector<std::uint64_t>> pts;
  pts.reserve(prob.mults.size());
  while (pts.size() < prob.mults.size()) {
    std::vector<std::uint64_t> q(static_cast<std::size_t>(n));
    for (auto& c : q) c = rng() % f.p;
    if (std::find(pts.begin(), pts.end(), q) != pts.end()) continue;
    pts.push_back(std::move(q));
  }

  // Pascal triangle mod p up to the degree.
  const std::size_t bmax = static_cast<std::size_t>(prob.degree) + 1;
  std::vector<std::vector<std::uint32_t>> binom(bmax);
  for (std::size_t i = 0; i < bmax; ++i) {
    binom[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) {
      binom[i][j] = static_cast<std::uint32_t>(
          f.reduce(std::uint64_t(binom[i - 1][j - 1]) + binom[i - 1][j]));
    }
  }

  std::vector<std::uint32_t> mat(rows * cols, 0);
  std::size_t row = 0;
  std::vector<int> alpha;
  std::vector<std::vector<int>> orders;
  for (std::size_t pi = 0; pi < pts.size(); ++pi) {
    // Powers of the coordinates up to the degree.
    std::vector<std::vector<std::uint64_t>> pw(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      auto& col = pw[static_cast<std::size_t>(j)];
      col.assign(static_cast<std::size_t>(prob.degree) + 1, 1);
      for (std::size_t e = 1; e < col.size(); ++e) {
        col[e] = f.mul(col[e - 1], pts[pi][static_cast<std::size_t>(j)]);
      }
    }
    orders.clear();
    alpha.clear();
    gen_exponents(n, prob.mults[pi] - 1, alpha, orders);
    for (const auto& a : orders) {
      std::uint32_t* dst = &mat[row * cols];
      for (std::size_t c = 0; c < cols; ++c) {
        const auto& b = monomials[c];
        std::uint64_t v = 1;
        bool zero = false;
        // Divided-power derivative of x^b of order a, evaluated at the point:
        // prod_j C(b_j, a_j) x_j^(b_j - a_j).
        for (int j = 0; j < n && !zero; ++j) {
          const std::size_t js = static_cast<std::size_t>(j);
          if (b[js] < a[js]) {
            zero = true;
          } else {
            v = f.mul(v, binom[static_cast<std::size_t>(b[js])]
                              [static_cast<std::size_t>(a[js])]);
            v = f.mul(v, pw[js][static_cast<std::size_t>(b[js] - a[js])]);
          }
        }
        dst[c] = zero ? 0 : static_cast<std::uint32_t>(v);
      }
      ++row;
    }
  }
  const std::size_t rank = matrix_rank(mat, rows, cols, f);
  return static_cast<std::int64_t>(cols) - static_cast<std::int64_t>(rank);
}

}  // namespace

std::int64_t h0_interpolation(const InterpolationProblem& prob) {
  if (prob.ambient_dim < 2)
    throw std::invalid_argument("h0_interpolation: ambient dimension must be >= 2");
  if (prob.degree < 0)
    throw std::invalid_argument("h0_interpolation: degree must be >= 0");
  if (prob.trials < 1)
    throw std::invalid_argument("h0_interpolation: need at least one trial");
  if (prob.prime < 2 || prob.prime > kMersenne31)
    throw std::invalid_argument("h0_interpolation: prime out of range");
  std::int64_t mmax = 0;
  for (std::int64_t m : prob.mults) {
    if (m < 1)
      throw std::invalid_argument("h0_interpolation: multiplicities must be >= 1");
    mmax = std::max(mmax, m);
  }
  if (prob.prime <= static_cast<std::uint64_t>(prob.degree) ||
      prob.prime <= static_cast<std::uint64_t>(mmax))
    throw std::invalid_argument(
        "h0_interpolation: prime must exceed the degree and every multiplicity");

  std::vector<std::vector<int>> monomials;
  std::vector<int> cur;
  gen_exponents(prob.ambient_dim, prob.degree, cur, monomials);
  const std::size_t cols = monomials.size();

  std::size_t rows = 0;
  for (std::int64_t m : prob.mults) {
    std::vector<std::vector<int>> orders;
    cur.clear();
    gen_exponents(prob.ambient_dim, m - 1, cur, orders);
    rows += orders.size();
  }
  if (cols > kMatrixCap || rows > kMatrixCap)
    throw std::invalid_argument("h0_interpolation: matrix exceeds the size cap");

  if (prob.mults.empty()) return static_cast<std::int64_t>(cols);

  std::int64_t best = static_cast<std::int64_t>(cols);
  for (int t = 0; t < prob.trials; ++t) {
    best = std::min(best, run_trial(prob, monomials, rows,
                                    prob.seed + static_cast<std::uint64_t>(t)));
  }
  return best;
}

InterpolationProblem problem_for(const DivisorClass& d, std::uint32_t prime,
                                 std::uint64_t seed, int trials) {
  if (d.degree() < 0)
    throw std::invalid_argument("problem_for: degree must be >= 0");
  InterpolationProblem prob;
  prob.ambient_dim = d.ambient_dim();
  // The size cap bounds everything long before 64-bit overflow.
  if (d.degree() > Int(kMersenne31))
    throw std::invalid_argument("problem_for: degree too large for the oracle");
  prob.degree = d.degree().convert_to<std::int64_t>();
  for (const Int& m : d.mults()) {
    if (m <= 0) continue;  // imposes nothing
    if (m > Int(kMersenne31))
      throw std::invalid_argument("problem_for: multiplicity too large for the oracle");
    prob.mults.push_back(m.convert_to<std::int64_t>());
  }
  prob.prime = prime;
  prob.seed = seed;
  prob.trials = trials;
  return prob;
}

VerifyReport verify_class(const DivisorClass& d, std::uint32_t prime,
                          std::uint64_t seed, int trials) {
  const int n = d.ambient_dim();
  if (n != 2 && n != 3)
    throw std::invalid_argument("verify_class: ambient dimension must be 2 or 3");
  ReductionReport red = standardize(d);
  const Int alg = (n == 2 ? dim2(d) : dim3(d)).h0;
  Int oracle;
  if (red.result.degree() < 0) {
    oracle = 0;
  } else {
    oracle = Int(
        h0_interpolation(problem_for(red.result, prime, seed, trials)));
  }
  const bool agree = oracle == alg;
  return {std::move(oracle), alg, agree, std::move(red.result)};
}

}  // namespace fatpoints
