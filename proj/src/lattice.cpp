#include "fatpoints/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace fatpoints {

namespace {
const Int kZero{0};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace

DivisorClass::DivisorClass(int ambient_dim, Int degree, std::vector<Int> mults)
    : n_(ambient_dim), degree_(std::move(degree)), mults_(std::move(mults)) {
  if (n_ < 2) throw std::invalid_argument("ambient dimension must be >= 2");
}

DivisorClass DivisorClass::hyperplane(int ambient_dim, std::size_t points) {
  return DivisorClass(ambient_dim, 1, std::vector<Int>(points, kZero));
}

DivisorClass DivisorClass::exceptional(int ambient_dim, std::size_t slot,
                                       std::size_t points) {
  if (slot >= points) throw std::invalid_argument("exceptional slot out of range");
  std::vector<Int> m(points, kZero);
  m[slot] = -1;
  return DivisorClass(ambient_dim, 0, std::move(m));
}

Int DivisorClass::mult_or_zero(std::size_t i) const {
  return i < mults_.size() ? mults_[i] : kZero;
}

DivisorClass DivisorClass::padded(std::size_t len) const {
  if (len <= mults_.size()) return *this;
  std::vector<Int> m = mults_;
  m.resize(len, kZero);
  return DivisorClass(n_, degree_, std::move(m));
}

DivisorClass DivisorClass::trimmed(std::size_t keep) const {
  std::vector<Int> m = mults_;
  while (m.size() > keep && m.back() == 0) m.pop_back();
  return DivisorClass(n_, degree_, std::move(m));
}

bool DivisorClass::operator==(const DivisorClass& o) const {
  if (n_ != o.n_ || degree_ != o.degree_) return false;
  const std::size_t len = std::max(mults_.size(), o.mults_.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (mult_or_zero(i) != o.mult_or_zero(i)) return false;
  }
  return true;
}

std::string DivisorClass::str() const {
  std::ostringstream os;
  os << '(' << degree_ << ';';
  for (std::size_t i = 0; i < mults_.size(); ++i) {
    os << (i ? "," : "") << mults_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& c) {
  return os << c.str();
}

RootClass::RootClass(DivisorClass cls) : cls_(std::move(cls)) {
  if (self_intersection(cls_) != -2)
    throw std::invalid_argument("root must have self-intersection -2");
}

RootClass RootClass::cremona_root(int ambient_dim) {
  const std::size_t k = static_cast<std::size_t>(ambient_dim) + 1;
  return RootClass(DivisorClass(ambient_dim, 1, std::vector<Int>(k, Int(1))));
}

RootClass RootClass::adjacent(int ambient_dim, std::size_t slot,
                              std::size_t points) {
  if (slot + 1 >= points)
    throw std::invalid_argument("adjacent root needs two slots");
  std::vector<Int> m(points, kZero);
  m[slot] = -1;   // E_slot - E_{slot+1}
  m[slot + 1] = 1;
  return RootClass(DivisorClass(ambient_dim, 0, std::move(m)));
}

Int intersect(const DivisorClass& a, const DivisorClass& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  Int v = Int(a.ambient_dim() - 1) * a.degree() * b.degree();
  const std::size_t len = std::min(a.points(), b.points());
  for (std::size_t i = 0; i < len; ++i) v -= a.mults()[i] * b.mults()[i];
  return v;
}

Int self_intersection(const DivisorClass& a) { return intersect(a, a); }

Int canonical_dot(const DivisorClass& a) {
  Int v = 0;
  for (const Int& m : a.mults()) v += m;
  return v - Int(a.ambient_dim() + 1) * a.degree();
}

Rational canonical_self(int ambient_dim, std::size_t points) {
  if (ambient_dim < 2) throw std::invalid_argument("ambient dimension must be >= 2");
  Rational v(ambient_dim + 3);
  v += Rational(4, ambient_dim - 1);
  v -= Rational(Int(points));
  return v;
}

DivisorClass reflect(const DivisorClass& d, const RootClass& r) {
  const DivisorClass& root = r.cls();
  if (root.ambient_dim() != d.ambient_dim())
    throw std::invalid_argument("reflect: ambient dimension mismatch");
  const Int c = intersect(d, root);
  const std::size_t len = std::max(d.points(), root.points());
  const DivisorClass dp = d.padded(len);
  std::vector<Int> m = dp.mults();
  for (std::size_t i = 0; i < root.points(); ++i) m[i] += c * root.mults()[i];
  return DivisorClass(d.ambient_dim(), dp.degree() + c * root.degree(),
                      std::move(m))
      .trimmed(d.points());
}

DivisorClass cremona(const DivisorClass& d) {
  const int n = d.ambient_dim();
  const std::size_t k = static_cast<std::size_t>(n) + 1;
  const DivisorClass w = d.padded(k);
  Int t = Int(n - 1) * w.degree();
  for (std::size_t i = 0; i < k; ++i) t -= w.mults()[i];
  std::vector<Int> m = w.mults();
  for (std::size_t i = 0; i < k; ++i) m[i] += t;
  return DivisorClass(n, w.degree() + t, std::move(m)).trimmed(d.points());
}

void WeylWord::append(const WeylWord& w) {
  moves_.insert(moves_.end(), w.moves_.begin(), w.moves_.end());
}

bool WeylWord::pure_weyl() const {
  for (const Move& m : moves_) {
    if (std::holds_alternative<ClampMove>(m)) return false;
  }
  return true;
}

WeylWord WeylWord::inverted() const {
  if (!pure_weyl())
    throw std::invalid_argument("cannot invert a word containing clamp moves");
  WeylWord out;
  for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) out.push(*it);
  return out;
}

WeylWord invert_word(const WeylWord& w) { return w.inverted(); }

namespace {

// Stable bubble sort into descending order, one recorded transposition per
// adjacent swap.  Quadratic, but multiplicity lists are short.
void bubble_sort_desc(std::vector<Int>& m, WeylWord& word) {
  if (m.size() < 2) return;
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

std::pair<DivisorClass, WeylWord> sort_desc(const DivisorClass& d) {
  std::vector<Int> m = d.mults();
  WeylWord word;
  bubble_sort_desc(m, word);
  return {DivisorClass(d.ambient_dim(), d.degree(), std::move(m)),
          std::move(word)};
}

DivisorClass apply_word(const DivisorClass& d, const WeylWord& w) {
  const int n = d.ambient_dim();
  std::size_t len = d.points();
  for (const Move& mv : w) {
    std::visit(Overloaded{
                   [&](const TranspositionMove& t) {
                     len = std::max(len, t.slot + 2);
                   },
                   [&](const CremonaMove&) {
                     len = std::max(len, static_cast<std::size_t>(n) + 1);
                   },
                   [&](const ClampMove& c) { len = std::max(len, c.slot + 1); },
               },
               mv);
  }
  Int deg = d.degree();
  std::vector<Int> m = d.padded(len).mults();
  for (const Move& mv : w) {
    std::visit(Overloaded{
                   [&](const TranspositionMove& t) {
                     std::swap(m[t.slot], m[t.slot + 1]);
                   },
                   [&](const CremonaMove&) {
                     Int t = Int(n - 1) * deg;
                     for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
                       t -= m[i];
                     deg += t;
                     for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
                       m[i] += t;
                   },
                   [&](const ClampMove& c) { m[c.slot] += c.amount; },
               },
               mv);
  }
  return DivisorClass(n, std::move(deg), std::move(m)).trimmed(d.points());
}

std::string RootLatticeType::str() const {
  switch (family) {
    case RootLatticeFamily::A:
      return "A_" + std::to_string(rank);
    case RootLatticeFamily::D:
      return "D_" + std::to_string(rank);
    case RootLatticeFamily::E:
      return "E_" + std::to_string(rank);
    case RootLatticeFamily::Indefinite:
      return "INDEFINITE";
  }
  return "?";
}

RootLatticeType root_lattice_type(int ambient_dim, std::size_t points) {
  if (ambient_dim < 2) throw std::invalid_argument("ambient dimension must be >= 2");
  if (points < 1) throw std::invalid_argument("need at least one point");
  if (canonical_self(ambient_dim, points) <= 0)
    return {RootLatticeFamily::Indefinite, 0};
  const int r = static_cast<int>(points);
  if (points <= static_cast<std::size_t>(ambient_dim) + 2)
    return {RootLatticeFamily::A, r};
  if (points == static_cast<std::size_t>(ambient_dim) + 3)
    return {RootLatticeFamily::D, r};
  // K.K > 0 beyond r = n+3 only happens for the del Pezzo range, r in {6,7,8}.
  return {RootLatticeFamily::E, r};
}

}  // namespace fatpoints
