#pragma once

#include "fatpoints/lattice.hpp"

namespace fatpoints {

enum class ReductionStatus { PreStandard, Standard, NotEffective };

const char* to_string(ReductionStatus s);

/// Outcome of a reduction run.  `word` replays the reduction:
/// apply_word(input, word) == result.  For a NotEffective verdict the
/// partially reduced class is returned; every move in the chain preserves
/// h0, so NotEffective certifies h0(input) = 0.
struct ReductionReport {
  DivisorClass result;
  WeylWord word;
  ReductionStatus status;
  /// Per working-slot totals removed by clamp moves (standardize only).
  std::vector<Int> clamp_total;
};

/// d >= m_1 >= ... >= m_r and (n-1) d >= m_1 + ... + m_{n+1}, with the
/// multiplicity list zero-padded to length n+1 for the sum test.
bool is_pre_standard(const DivisorClass& d);
/// Pre-standard with m_r >= 0.
bool is_standard(const DivisorClass& d);

/// Sort the multiplicities and apply Cremona moves while the pairing with
/// H - E_1 - ... - E_{n+1} is negative.  Each Cremona move strictly lowers
/// the degree, so the loop terminates.  Stops with PreStandard when the
/// sorted class satisfies d >= m_1, otherwise NotEffective: an effective
/// class of degree d >= 0 cannot vanish to order m_1 > d at a point, and
/// no class of negative degree is effective.
ReductionReport pre_standard_form(const DivisorClass& d);

/// Like pre_standard_form but negative multiplicities are clamped to zero
/// after every sort (recorded as clamp moves); removing an m_i < 0 does not
/// change h0.  Ends Standard or NotEffective.
ReductionReport standardize(const DivisorClass& d);

}  // namespace fatpoints
