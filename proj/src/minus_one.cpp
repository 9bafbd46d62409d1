#include "fatpoints/minus_one.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "fatpoints/dimension.hpp"

namespace fatpoints {

const char* to_string(MinusOneFailure f) {
  switch (f) {
    case MinusOneFailure::BadNumerics:
      return "BadNumerics";
    case MinusOneFailure::NegativeDegree:
      return "NegativeDegree";
    case MinusOneFailure::NegativeMultNotExceptional:
      return "NegativeMultNotExceptional";
    case MinusOneFailure::StalledPositiveF:
      return "StalledPositiveF";
  }
  return "?";
}

namespace {

// Exactly one multiplicity equal to -1, all others zero, degree zero.
bool is_exceptional_pattern(const Int& d, const std::vector<Int>& m) {
  if (d != 0) return false;
  int minus = 0;
  for (const Int& v : m) {
    if (v == -1) {
      ++minus;
    } else if (v != 0) {
      return false;
    }
  }
  return minus == 1;
}

std::vector<Int> sorted_desc(std::vector<Int> m) {
  std::stable_sort(m.begin(), m.end(), [](const Int& a, const Int& b) { return a > b; });
  return m;
}

}  // namespace

MinusOneCertificate is_minus_one_class(const DivisorClass& e) {
  MinusOneCertificate cert{false, {}, std::nullopt};
  if (self_intersection(e) != -1 || canonical_dot(e) != -1) {
    cert.chain.push_back(e);
    cert.failure = MinusOneFailure::BadNumerics;
    return cert;
  }
  const int n = e.ambient_dim();
  const std::size_t len = std::max(e.points(), static_cast<std::size_t>(n) + 1);
  DivisorClass cur = e.padded(len);
  cert.chain.push_back(cur);
  for (;;) {
    if (is_exceptional_pattern(cur.degree(), cur.mults())) {
      cert.verdict = true;
      return cert;
    }
    DivisorClass sorted(n, cur.degree(), sorted_desc(cur.mults()));
    if (sorted != cur) {
      cur = sorted;
      cert.chain.push_back(cur);
      continue;  // re-test the exceptional pattern on the sorted class
    }
    if (cur.degree() <= 0) {
      cert.failure = MinusOneFailure::NegativeDegree;
      return cert;
    }
    if (cur.mults().back() < 0) {
      // A (-1)-class with a negative multiplicity is the exceptional class
      // itself, which was caught above.
      cert.failure = MinusOneFailure::NegativeMultNotExceptional;
      return cert;
    }
    Int excess = Int(n - 1) * cur.degree();
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
      excess -= cur.mults()[i];
    if (excess >= 0) {
      cert.failure = MinusOneFailure::StalledPositiveF;
      return cert;
    }
    cur = cremona(cur).padded(len);
    cert.chain.push_back(cur);
  }
}

MinusOneSet::MinusOneSet(int ambient_dim, std::size_t points,
                         std::vector<Rep> reps)
    : n_(ambient_dim), r_(points), reps_(std::move(reps)) {}

Int MinusOneSet::size() const {
  Int total = 0;
  for (const Rep& rep : reps_) {
    // multinomial: r! / prod(count of each repeated value)!
    Int ways = 1;
    for (std::size_t i = 2; i <= r_; ++i) ways *= Int(i);
    std::size_t i = 0;
    while (i < rep.mults.size()) {
      std::size_t j = i;
      while (j < rep.mults.size() && rep.mults[j] == rep.mults[i]) ++j;
      Int fact = 1;
      for (std::size_t k = 2; k <= j - i; ++k) fact *= Int(k);
      ways /= fact;
      i = j;
    }
    total += ways;
  }
  return total;
}

void MinusOneSet::for_each(
    const std::function<void(const DivisorClass&)>& f) const {
  for (const Rep& rep : reps_) {
    std::vector<Int> m = rep.mults;
    std::sort(m.begin(), m.end());  // ascending start for next_permutation
    do {
      f(DivisorClass(n_, rep.degree, m));
    } while (std::next_permutation(m.begin(), m.end()));
  }
}

std::vector<DivisorClass> MinusOneSet::to_vector() const {
  std::vector<DivisorClass> out;
  for_each([&](const DivisorClass& c) { out.push_back(c); });
  return out;
}

MinusOneSet enumerate_minus_one(int ambient_dim, std::size_t points,
                                const Int& d_max) {
  if (ambient_dim < 2)
    throw std::invalid_argument("enumerate_minus_one: ambient dimension must be >= 2");
  if (points < 1)
    throw std::invalid_argument("enumerate_minus_one: need at least one point");
  if (d_max < 0)
    throw std::invalid_argument("enumerate_minus_one: degree bound must be >= 0");
  const int n = ambient_dim;
  const std::size_t len = std::max(points, static_cast<std::size_t>(n) + 1);
  const std::size_t k = static_cast<std::size_t>(n) + 1;

  using Node = std::pair<Int, std::vector<Int>>;  // degree, sorted mults
  std::set<Node> seen;
  std::deque<Node> queue;
  std::vector<Int> start(len, Int(0));
  start.back() = -1;  // the exceptional pattern, sorted descending
  seen.emplace(Int(0), start);
  queue.emplace_back(Int(0), std::move(start));

  std::vector<bool> pick(len);
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    // Cremona applied to every choice of n+1 slots; under the permutation
    // collapse these are all the neighbors of the pattern.
    std::fill(pick.begin(), pick.end(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      Int t = Int(n - 1) * node.first;
      for (std::size_t i = 0; i < len; ++i) {
        if (pick[i]) t -= node.second[i];
      }
      if (t == 0) continue;
      Int nd = node.first + t;
      if (nd < 0 || nd > d_max) continue;
      std::vector<Int> m = node.second;
      for (std::size_t i = 0; i < len; ++i) {
        if (pick[i]) m[i] += t;
      }
      m = sorted_desc(std::move(m));
      Node next{std::move(nd), std::move(m)};
      if (seen.insert(next).second) queue.push_back(std::move(next));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  std::vector<MinusOneSet::Rep> reps;
  for (const Node& node : seen) {
    std::size_t nonzero = 0;
    for (const Int& v : node.second) {
      if (v != 0) ++nonzero;
    }
    if (nonzero > points) continue;  // needs more slots than the caller has
    std::vector<Int> m;
    m.reserve(points);
    for (const Int& v : node.second) {
      if (v != 0) m.push_back(v);
    }
    m.resize(points, Int(0));
    reps.push_back({node.first, sorted_desc(std::move(m))});
  }
  std::sort(reps.begin(), reps.end(), [](const MinusOneSet::Rep& a,
                                         const MinusOneSet::Rep& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.mults < b.mults;
  });
  return MinusOneSet(n, points, std::move(reps));
}

std::vector<std::pair<DivisorClass, Int>> negative_classes(
    const DivisorClass& d, const Int& d_max) {
  std::vector<std::pair<DivisorClass, Int>> out;
  if (d.points() == 0) return out;
  const MinusOneSet set = enumerate_minus_one(d.ambient_dim(), d.points(), d_max);
  set.for_each([&](const DivisorClass& e) {
    Int p = intersect(d, e);
    if (p < 0) out.emplace_back(e, std::move(p));
  });
  return out;
}

bool is_special2(const DivisorClass& d) {
  if (d.ambient_dim() != 2)
    throw std::invalid_argument("is_special2: ambient dimension must be 2");
  const DimensionResult res = dim2(d);
  return res.h0 > 0 && res.h0 > res.expected;
}

}  // namespace fatpoints
