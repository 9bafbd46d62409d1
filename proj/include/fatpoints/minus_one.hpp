#pragma once

#include <functional>
#include <optional>

#include "fatpoints/lattice.hpp"

namespace fatpoints {

enum class MinusOneFailure {
  BadNumerics,                // E.E != -1 or E.K != -1
  NegativeDegree,             // descent reached degree <= 0 away from an E_i
  NegativeMultNotExceptional, // negative multiplicity on a non-exceptional class
  StalledPositiveF,           // descent stopped without reaching an E_i
};

const char* to_string(MinusOneFailure f);

/// Verdict of the (-1)-class test together with the descent chain.
/// Consecutive chain entries differ by a sort or by one Cremona move; for
/// an accepted class the chain ends at some E_i.
struct MinusOneCertificate {
  bool verdict;
  std::vector<DivisorClass> chain;
  std::optional<MinusOneFailure> failure;
};

/// Tests whether E is a (-1)-class, i.e. lies in the Weyl orbit of E_1.
/// After the numeric gate E.E = E.K = -1, the class is driven down by
/// Cremona moves (each strictly lowers the degree); genuine (-1)-classes
/// always reach an exceptional class, anything else trips one of the
/// rejection guards.
MinusOneCertificate is_minus_one_class(const DivisorClass& e);

/// All (-1)-classes on the blow-up at r points with degree <= d_max, stored
/// as sorted multiplicity patterns; slot assignments are expanded on demand
/// so that memory stays proportional to the number of patterns.
class MinusOneSet {
public:
  struct Rep {
    Int degree;
    std::vector<Int> mults;  // length r, sorted descending
  };

  MinusOneSet(int ambient_dim, std::size_t points, std::vector<Rep> reps);

  int ambient_dim() const { return n_; }
  std::size_t points() const { return r_; }
  const std::vector<Rep>& representatives() const { return reps_; }

  /// Number of distinct classes (patterns times slot assignments).
  Int size() const;
  /// Visit every class in a fixed deterministic order.
  void for_each(const std::function<void(const DivisorClass&)>& f) const;
  std::vector<DivisorClass> to_vector() const;

private:
  int n_;
  std::size_t r_;
  std::vector<Rep> reps_;
};

/// Breadth-first orbit search from the exceptional classes under sorts and
/// Cremona moves, pruned at degree > d_max.  Complete for the bound: the
/// descent path of any (-1)-class has strictly decreasing degrees, so its
/// reverse never exceeds the degree of the class it reaches.
MinusOneSet enumerate_minus_one(int ambient_dim, std::size_t points,
                                const Int& d_max);

/// The enumerated (-1)-classes meeting D negatively, with their products.
/// A negative product puts the class in the base locus of |D|.
std::vector<std::pair<DivisorClass, Int>> negative_classes(
    const DivisorClass& d, const Int& d_max);

/// Plane speciality test: the computed dimension strictly exceeds the
/// expected one (and the system is nonempty).
bool is_special2(const DivisorClass& d);

}  // namespace fatpoints
