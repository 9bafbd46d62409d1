#include "fatpoints/reduction.hpp"

#include <algorithm>

namespace fatpoints {

const char* to_string(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::PreStandard:
      return "PreStandard";
    case ReductionStatus::Standard:
      return "Standard";
    case ReductionStatus::NotEffective:
      return "NotEffective";
  }
  return "?";
}

namespace {

// (n-1) d - (m_1 + ... + m_{n+1}); the pairing with H - E_1 - ... - E_{n+1}.
Int cremona_excess(int n, const Int& d, const std::vector<Int>& m) {
  Int t = Int(n - 1) * d;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) t -= m[i];
  return t;
}

void apply_cremona(int n, Int& d, std::vector<Int>& m, const Int& t) {
  d += t;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) m[i] += t;
}

void sort_recording(std::vector<Int>& m, WeylWord& word) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t j = 0; j + 1 < m.size(); ++j) {
      if (m[j] < m[j + 1]) {
        std::swap(m[j], m[j + 1]);
        word.push(TranspositionMove{j});
        moved = true;
      }
    }
  }
}

}  // namespace

bool is_pre_standard(const DivisorClass& d) {
  const int n = d.ambient_dim();
  const auto& m = d.mults();
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i] < m[i + 1]) return false;
  }
  if (!m.empty() && d.degree() < m[0]) return false;
  Int top = 0;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
    top += d.mult_or_zero(i);
  return Int(n - 1) * d.degree() >= top;
}

bool is_standard(const DivisorClass& d) {
  if (!is_pre_standard(d)) return false;
  return d.mults().empty() || d.mults().back() >= 0;
}

ReductionReport pre_standard_form(const DivisorClass& input) {
  const int n = input.ambient_dim();
  const std::size_t len =
      std::max(input.points(), static_cast<std::size_t>(n) + 1);
  Int d = input.degree();
  std::vector<Int> m = input.padded(len).mults();
  WeylWord word;
  ReductionStatus status;
  for (;;) {
    sort_recording(m, word);
    if (d < 0) {
      status = ReductionStatus::NotEffective;
      break;
    }
    const Int t = cremona_excess(n, d, m);
    if (t >= 0) {
      status = d >= m[0] ? ReductionStatus::PreStandard
                         : ReductionStatus::NotEffective;
      break;
    }
    apply_cremona(n, d, m, t);
    word.push(CremonaMove{});
  }
  return {DivisorClass(n, std::move(d), std::move(m)).trimmed(input.points()),
          std::move(word), status, {}};
}

ReductionReport standardize(const DivisorClass& input) {
  const int n = input.ambient_dim();
  const std::size_t len =
      std::max(input.points(), static_cast<std::size_t>(n) + 1);
  Int d = input.degree();
  std::vector<Int> m = input.padded(len).mults();
  WeylWord word;
  std::vector<Int> clamp(len, Int(0));
  ReductionStatus status;
  for (;;) {
    sort_recording(m, word);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] < 0) {
        Int amount = -m[i];
        m[i] = 0;
        clamp[i] += amount;
        word.push(ClampMove{i, std::move(amount)});
      }
    }
    if (d < 0) {
      status = ReductionStatus::NotEffective;
      break;
    }
    if (d == 0 &&
        std::all_of(m.begin(), m.end(), [](const Int& v) { return v == 0; })) {
      status = ReductionStatus::Standard;  // the trivial class, h0 = 1
      break;
    }
    const Int t = cremona_excess(n, d, m);
    if (t >= 0) {
      status = d >= m[0] ? ReductionStatus::Standard
                         : ReductionStatus::NotEffective;
      break;
    }
    apply_cremona(n, d, m, t);
    word.push(CremonaMove{});
  }
  return {DivisorClass(n, std::move(d), std::move(m)).trimmed(input.points()),
          std::move(word), status, std::move(clamp)};
}

}  // namespace fatpoints
