#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fatpoints {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A divisor class d*H - sum_i m_i*E_i on the blow-up X of P^n at r points
/// in very general position.  H is the pull-back of a hyperplane, E_i the
/// exceptional divisor over the i-th point.  With this sign convention the
/// class E_i itself has degree 0 and multiplicity list (0,..,0,-1,0,..,0)
/// with the -1 in slot i.
///
/// The intersection pairing is diagonal: H.H = n-1, E_i.E_i = -1, mixed
/// products 0.  Appending points of multiplicity 0 changes nothing (they are
/// just more very general points the class ignores), so classes compare
/// equal modulo trailing zero padding.
class DivisorClass {
public:
  DivisorClass(int ambient_dim, Int degree, std::vector<Int> mults);

  static DivisorClass hyperplane(int ambient_dim, std::size_t points = 0);
  /// E_slot on a blow-up with `points` slots (slot is 0-based).
  static DivisorClass exceptional(int ambient_dim, std::size_t slot,
                                  std::size_t points);

  int ambient_dim() const { return n_; }
  const Int& degree() const { return degree_; }
  const std::vector<Int>& mults() const { return mults_; }
  std::size_t points() const { return mults_.size(); }

  /// Multiplicity in slot i, zero beyond the stored list.
  Int mult_or_zero(std::size_t i) const;

  /// Same class with the multiplicity list zero-extended to length >= len.
  DivisorClass padded(std::size_t len) const;
  /// Same class with trailing zero multiplicities dropped, but never below
  /// `keep` slots.
  DivisorClass trimmed(std::size_t keep) const;

  /// Padding-insensitive equality: same ambient space, same degree, same
  /// multiplicities after zero-extension to a common length.
  bool operator==(const DivisorClass& o) const;
  bool operator!=(const DivisorClass& o) const { return !(*this == o); }

  std::string str() const;

private:
  int n_;
  Int degree_;
  std::vector<Int> mults_;
};

std::ostream& operator<<(std::ostream& os, const DivisorClass& c);

/// A root: a class R with R.R = -2.  Reflections in roots generate the Weyl
/// group action used by the reduction algorithms.
class RootClass {
public:
  /// Throws std::invalid_argument unless cls.cls = -2.
  explicit RootClass(DivisorClass cls);

  /// H - E_1 - ... - E_{n+1}, the root whose reflection is the Cremona move.
  static RootClass cremona_root(int ambient_dim);
  /// E_slot - E_{slot+1}; reflecting in it swaps the two multiplicities.
  static RootClass adjacent(int ambient_dim, std::size_t slot,
                            std::size_t points);

  const DivisorClass& cls() const { return cls_; }

private:
  DivisorClass cls_;
};

/// Intersection product; shorter multiplicity lists are zero-padded.
/// Throws std::invalid_argument on ambient dimension mismatch.
Int intersect(const DivisorClass& a, const DivisorClass& b);
Int self_intersection(const DivisorClass& a);

/// Pairing with K = K_X / (n-1), where K_X is the canonical class.  The
/// scaled pairing D.K = sum_i m_i - (n+1) d is an integer for every class
/// even though K itself is not integral for n > 2.
Int canonical_dot(const DivisorClass& a);

/// K.K = n + 3 + 4/(n-1) - r, exact.
Rational canonical_self(int ambient_dim, std::size_t points);

/// D + (D.R) R.  The image of D under the reflection in the root R.
DivisorClass reflect(const DivisorClass& d, const RootClass& r);

/// The Cremona move: reflection in the root H - E_1 - ... - E_{n+1}.
/// With t = (n-1)d - (m_1 + ... + m_{n+1}) it sends d to d + t and adds t
/// to each of the first n+1 multiplicities.  Classes with fewer than n+1
/// slots are padded with zeros first; padding that stays zero is stripped
/// from the output.
DivisorClass cremona(const DivisorClass& d);

// ---------------------------------------------------------------------------
// Move words

/// Swap of the adjacent multiplicity slots (slot, slot+1).
struct TranspositionMove {
  std::size_t slot;
};
/// The Cremona reflection acting on slots 0..n.
struct CremonaMove {};
/// m_slot += amount with amount >= 0.  Records the removal of a negative
/// multiplicity during standardization.  Not a Weyl group element, so words
/// containing clamps are not invertible.
struct ClampMove {
  std::size_t slot;
  Int amount;
};
using Move = std::variant<TranspositionMove, CremonaMove, ClampMove>;

class WeylWord {
public:
  WeylWord() = default;
  explicit WeylWord(std::vector<Move> moves) : moves_(std::move(moves)) {}

  void push(Move m) { moves_.push_back(std::move(m)); }
  void append(const WeylWord& w);

  /// True when the word contains no clamp moves.
  bool pure_weyl() const;
  /// Reversal of the word; transpositions and Cremona moves are their own
  /// inverses.  Throws std::invalid_argument if the word contains a clamp.
  WeylWord inverted() const;

  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }
  const std::vector<Move>& moves() const { return moves_; }
  auto begin() const { return moves_.begin(); }
  auto end() const { return moves_.end(); }

private:
  std::vector<Move> moves_;
};

/// Stable descending sort of the multiplicities realized by adjacent
/// transpositions; ties keep their original order, so the returned word is
/// deterministic.
std::pair<DivisorClass, WeylWord> sort_desc(const DivisorClass& d);

/// Apply the moves left to right.  The class is zero-padded as needed to
/// fit every move; padding that remains zero is stripped afterwards.
DivisorClass apply_word(const DivisorClass& d, const WeylWord& w);
WeylWord invert_word(const WeylWord& w);

// ---------------------------------------------------------------------------
// Root lattice orthogonal to the canonical class

enum class RootLatticeFamily { A, D, E, Indefinite };

struct RootLatticeType {
  RootLatticeFamily family;
  int rank;  // 0 for Indefinite
  std::string str() const;
  bool operator==(const RootLatticeType& o) const {
    return family == o.family && rank == o.rank;
  }
};

/// Isometry type of the orthogonal complement of the canonical class in the
/// Picard lattice: A_r for r <= n+2, D_{n+3} at r = n+3, the exceptional
/// types E_6, E_7, E_8 for the remaining cases with K.K > 0, and INDEFINITE
/// exactly when K.K <= 0.
RootLatticeType root_lattice_type(int ambient_dim, std::size_t points);

}  // namespace fatpoints
