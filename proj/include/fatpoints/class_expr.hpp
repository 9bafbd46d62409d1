#pragma once

#include <optional>
#include <string>

#include "fatpoints/lattice.hpp"

namespace fatpoints {

/// A parsed class expression.  `notation_dim` is set when the input used
/// the Ln(...) form, which carries the ambient dimension.
struct ParsedClass {
  std::optional<int> notation_dim;
  Int degree;
  std::vector<Int> mults;
};

/// Accepts either a flat token list "d m1 m2 ..." or a single token in
/// exponent notation "Ln(d;m1^a1,m2^a2,...)", where m^a stands for a
/// repetitions of m.  Throws std::invalid_argument with a message on
/// malformed input.
ParsedClass parse_class_tokens(const std::vector<std::string>& tokens);

/// "d m1 ... mr".
std::string format_plain(const DivisorClass& c);
/// "Ln(d;m1^a1,...)" with runs of equal multiplicities compressed; a run of
/// length one prints without the caret.
std::string format_exponent(const DivisorClass& c);

}  // namespace fatpoints
