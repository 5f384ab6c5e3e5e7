#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace ajoin {

/// Univariate polynomial, coefficients in ascending degree order.
/// Trailing zero coefficients are trimmed, so the leading coefficient is
/// nonzero except for the zero polynomial (empty coefficient list).
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial({v}); }
  /// x - root
  static Polynomial linear_root(const T& root) { return Polynomial({T(0) - root, T(1)}); }
  static Polynomial x() { return Polynomial({T(0), T(1)}); }

  static Polynomial from_roots(std::span<const T> roots) {
    Polynomial p = constant(T(1));
    for (const auto& r : roots) p = p * linear_root(r);
    return p;
  }

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const noexcept { return c_; }
  T coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  template <class U>
  U operator()(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  /// q(x) = p(x - s)
  Polynomial shifted(const T& s) const {
    Polynomial acc;
    const Polynomial lin = linear_root(s);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  Polynomial monic() const {
    assert(!is_zero());
    Polynomial m = *this;
    const T lead = leading();
    for (auto& a : m.c_) a = a / lead;
    return m;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& a : c_) a *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  Polynomial pow(int e) const {
    assert(e >= 0);
    Polynomial r = constant(T(1));
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  /// Long division; returns (quotient, remainder).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    assert(!d.is_zero());
    if (degree() < d.degree()) return {Polynomial{}, *this};
    std::vector<T> rem = c_;
    std::vector<T> quo(c_.size() - d.c_.size() + 1, T(0));
    const T lead = d.leading();
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
      const T f = rem[k + d.c_.size() - 1] / lead;
      quo[k] = f;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
    }
    rem.resize(d.c_.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
      const T& a = p.c_[k];
      if (a == T(0)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << a << ")";
      if (k >= 1) os << "x";
      if (k >= 2) os << "^" << k;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using RealPolynomial = Polynomial<double>;

}  // namespace ajoin
