#pragma once

// Arithmetic in the real Clifford algebra R_{0,m}: generators e_1..e_m with
// e_j e_k + e_k e_j = -2 delta_jk. Blades are stored as bitmasks with bit j-1
// standing for e_j, always in increasing generator order.

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "cliffgen/error.hpp"
#include "cliffgen/rational.hpp"

namespace cliffgen {

inline constexpr int kMaxDimension = 16;

void check_dimension(int m);

struct BladeMask {
  std::uint32_t bits = 0;
  int m = 1;

  BladeMask() = default;
  BladeMask(std::uint32_t bits_, int m_);

  /// e_j for 1 <= j <= m.
  static BladeMask generator(int j, int m);
  static BladeMask identity(int m) { return BladeMask(0, m); }

  int grade() const { return std::popcount(bits); }

  friend bool operator==(const BladeMask&, const BladeMask&) = default;
};

struct BladeProduct {
  int sign;
  BladeMask mask;
};

/// Sign picked up when the product e_a e_b is brought to canonical order,
/// including the -1 for every generator that appears in both.
inline int blade_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const std::uint32_t low = rest & (~rest + 1);
    // generators of a with a larger index than this generator of b
    swaps += std::popcount(a & ~((low << 1) - 1));
  }
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

BladeProduct blade_product(const BladeMask& a, const BladeMask& b);

/// Human-readable blade name: "1", "e1", "e13", ... (indices >= 10 are bracketed).
std::string blade_name(std::uint32_t bits);

template <class T>
class Multivector {
 public:
  using Terms = std::map<std::uint32_t, T>;

  explicit Multivector(int m = 1) : m_(m) { check_dimension(m); }

  static Multivector scalar(int m, const T& value) {
    Multivector out(m);
    out.add_term(0, value);
    return out;
  }

  static Multivector blade(const BladeMask& mask, const T& value = T(1)) {
    Multivector out(mask.m);
    out.add_term(mask.bits, value);
    return out;
  }

  int dim() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  T coefficient(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? T(0) : it->second;
  }

  T scalar_part() const { return coefficient(0); }

  void add_term(std::uint32_t mask, const T& value) {
    if (value == T(0)) return;
    if (mask >> m_) throw PreconditionError("blade mask exceeds dimension");
    auto [it, inserted] = terms_.try_emplace(mask, value);
    if (!inserted) {
      it->second += value;
      if (it->second == T(0)) terms_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& o) {
    same_dim(o);
    for (const auto& [mask, c] : o.terms_) add_term(mask, c);
    return *this;
  }

  Multivector& operator-=(const Multivector& o) {
    same_dim(o);
    for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
    return *this;
  }

  Multivector& operator*=(const T& s) {
    if (s == T(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [mask, c] : terms_) c *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= T(-1); }
  friend Multivector operator*(Multivector a, const T& s) { return a *= s; }
  friend Multivector operator*(const T& s, Multivector a) { return a *= s; }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.same_dim(b);
    Multivector out(a.m_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        T c = ca * cb;
        if (blade_sign(ma, mb) < 0) c = -c;
        out.add_term(ma ^ mb, c);
      }
    }
    return out;
  }

  /// e_j * this, the left action used by the Dirac operator.
  Multivector left_generator(int j) const {
    const std::uint32_t g = std::uint32_t{1} << (j - 1);
    Multivector out(m_);
    for (const auto& [mask, c] : terms_) {
      out.add_term(mask ^ g, blade_sign(g, mask) < 0 ? T(-c) : c);
    }
    return out;
  }

  Multivector grade_part(int g) const {
    Multivector out(m_);
    for (const auto& [mask, c] : terms_) {
      if (std::popcount(mask) == g) out.terms_.emplace(mask, c);
    }
    return out;
  }

  template <class U>
  Multivector<U> cast(U (*convert)(const T&)) const {
    Multivector<U> out(m_);
    for (const auto& [mask, c] : terms_) out.add_term(mask, convert(c));
    return out;
  }

  /// Euclidean norm of the coefficient vector.
  auto norm() const {
    using std::sqrt;
    T sum = T(0);
    for (const auto& [mask, c] : terms_) sum += c * c;
    return sqrt(sum);
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      if (mask != 0) os << "*" << blade_name(mask);
    }
    return os.str();
  }

 private:
  void same_dim(const Multivector& o) const {
    if (o.m_ != m_) throw PreconditionError("multivector dimension mismatch");
  }

  int m_;
  Terms terms_;
};

using RationalMultivector = Multivector<Rational>;

/// x = sum_j v_j e_j.
template <class T, class Range>
Multivector<T> vector_multivector(int m, const Range& components) {
  Multivector<T> out(m);
  int j = 0;
  for (const auto& v : components) {
    if (j >= m) throw PreconditionError("too many vector components");
    out.add_term(std::uint32_t{1} << j, T(v));
    ++j;
  }
  return out;
}

}  // namespace cliffgen
