#pragma once

// Brute-force enumeration of (-1)-classes, used to cross-check the
// breadth-first enumeration.  Solves
//   sum m_i   = (n+1) d - 1
//   sum m_i^2 = (n-1) d^2 + 1
// over sorted integer vectors and keeps the solutions the descent accepts.

#include <algorithm>
#include <functional>
#include <vector>

#include "fatpoints/lattice.hpp"
#include "fatpoints/minus_one.hpp"

namespace fatpoints_testing {

inline std::vector<fatpoints::MinusOneSet::Rep> search_minus_one(
    int n, std::size_t r, long long d_max) {
  using fatpoints::Int;
  std::vector<fatpoints::MinusOneSet::Rep> out;
  for (long long d = 0; d <= d_max; ++d) {
    const long long want_sum = (n + 1) * d - 1;
    const long long want_sq = (n - 1) * d * d + 1;
    long long hi = 0;
    while ((hi + 1) * (hi + 1) <= want_sq) ++hi;

    std::vector<long long> m(r, 0);
    const std::function<void(std::size_t, long long, long long, long long)>
        rec = [&](std::size_t i, long long prev, long long sum, long long sq) {
          if (i == r) {
            if (sum == want_sum && sq == want_sq) {
              std::vector<Int> mm(m.begin(), m.end());
              fatpoints::DivisorClass cand(n, Int(d), mm);
              if (fatpoints::is_minus_one_class(cand).verdict)
                out.push_back({Int(d), std::move(mm)});
            }
            return;
          }
          const long long left = static_cast<long long>(r - i - 1);
          for (long long v = std::min(prev, hi); v >= -hi; --v) {
            const long long s = sum + v;
            const long long q = sq + v * v;
            if (q > want_sq) continue;
            if (q + left * hi * hi < want_sq) continue;
            if (s - left * hi > want_sum) continue;
            if (s + left * std::max(v, 0ll) < want_sum) continue;
            m[i] = v;
            rec(i + 1, v, s, q);
          }
        };
    rec(0, hi, 0, 0);
  }
  std::sort(out.begin(), out.end(),
            [](const fatpoints::MinusOneSet::Rep& a,
               const fatpoints::MinusOneSet::Rep& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return a.mults < b.mults;
            });
  return out;
}

inline bool same_reps(const std::vector<fatpoints::MinusOneSet::Rep>& a,
                      const std::vector<fatpoints::MinusOneSet::Rep>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].degree != b[i].degree || a[i].mults != b[i].mults) return false;
  }
  return true;
}

}  // namespace fatpoints_testing
