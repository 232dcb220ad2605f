#pragma once

// Exact arithmetic in the cyclotomic field Q(ζ_m), with elements stored in
// the power basis 1, ζ, ..., ζ^{φ(m)-1} reduced modulo Φ_m.

#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "eqloc/core.hpp"

namespace eqloc {

/// Q(ζ_m): the reduction table ζ^k for k = 0..m-1.
class CyclotomicField {
public:
  explicit CyclotomicField(int m) : m_(m) {
    if (m < 1) throw InvalidInput("conductor must be positive");
    phi_poly_ = cyclotomic_polynomial(m);
    phi_ = static_cast<int>(phi_poly_.size()) - 1;
    pow_.assign(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(phi_)));
    // ζ^k for k < φ is a basis vector; higher powers use ζ^φ = -Σ c_i ζ^i
    std::vector<Rational> cur(static_cast<std::size_t>(phi_));
    cur[0] = 1;
    for (int k = 0; k < m; ++k) {
      pow_[static_cast<std::size_t>(k)] = cur;
      std::vector<Rational> next(static_cast<std::size_t>(phi_));
      const Rational top = cur[static_cast<std::size_t>(phi_ - 1)];
      for (int i = phi_ - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
      for (int i = 0; i < phi_; ++i) next[static_cast<std::size_t>(i)] -= top * Rational(phi_poly_[static_cast<std::size_t>(i)]);
      cur = std::move(next);
    }
  }

  int conductor() const { return m_; }
  int degree() const { return phi_; }
  const std::vector<Rational>& power(long long k) const {
    long long r = k % m_;
    if (r < 0) r += m_;
    return pow_[static_cast<std::size_t>(r)];
  }

  /// Integer coefficients of Φ_m, lowest degree first, monic.
  static std::vector<Int> cyclotomic_polynomial(int m) {
    // x^m - 1 divided by Φ_d for every proper divisor d
    std::vector<Int> num(static_cast<std::size_t>(m + 1), 0);
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      auto den = cyclotomic_polynomial(d);
      num = divide_exact(num, den);
    }
    return num;
  }

private:
  static std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<Int> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
      Int c = num[i];  // den is monic
      q[i - dn] = c;
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
  }

  int m_;
  int phi_ = 0;
  std::vector<Int> phi_poly_;
  std::vector<std::vector<Rational>> pow_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// An element of Q(ζ_m) in canonical reduced form.
class Cyc {
public:
  Cyc() = default;
  explicit Cyc(FieldPtr f) : f_(std::move(f)), c_(static_cast<std::size_t>(f_->degree())) {}
  Cyc(FieldPtr f, const Rational& r) : Cyc(std::move(f)) { c_[0] = r; }

  /// ζ_m^k.
  static Cyc root(const FieldPtr& f, long long k) {
    Cyc z(f);
    z.c_ = f->power(k);
    return z;
  }

  const FieldPtr& field() const { return f_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  Rational rational() const {
    if (!is_rational()) throw InvalidInput("cyclotomic number is not rational");
    return c_.empty() ? Rational(0) : c_[0];
  }

  Cyc& operator+=(const Cyc& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyc& operator-=(const Cyc& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Cyc& operator*=(const Rational& r) {
    for (auto& x : c_) x *= r;
    return *this;
  }
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Rational& r) { return a *= r; }
  friend Cyc operator-(Cyc a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    const auto& F = *a.f_;
    const int phi = F.degree();
    std::vector<Rational> prod(static_cast<std::size_t>(2 * phi), 0);
    for (int i = 0; i < phi; ++i) {
      if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < phi; ++j)
        if (b.c_[static_cast<std::size_t>(j)] != 0)
          prod[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
    Cyc r(a.f_);
    for (int k = 0; k < 2 * phi; ++k) {
      if (prod[static_cast<std::size_t>(k)] == 0) continue;
      const auto& p = F.power(k);
      for (int i = 0; i < phi; ++i) r.c_[static_cast<std::size_t>(i)] += prod[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(i)];
    }
    return r;
  }

  /// Complex conjugation ζ ↦ ζ^{-1}.
  Cyc conj() const {
    Cyc r(f_);
    for (int i = 0; i < f_->degree(); ++i) {
      if (c_[static_cast<std::size_t>(i)] == 0) continue;
      const auto& p = f_->power(-i);
      for (int j = 0; j < f_->degree(); ++j) r.c_[static_cast<std::size_t>(j)] += c_[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(j)];
    }
    return r;
  }

  /// Galois action ζ ↦ ζ^k (k coprime to the conductor).
  Cyc galois(long long k) const {
    Cyc r(f_);
    for (int i = 0; i < f_->degree(); ++i) {
      if (c_[static_cast<std::size_t>(i)] == 0) continue;
      const auto& p = f_->power(static_cast<long long>(i) * k);
      for (int j = 0; j < f_->degree(); ++j) r.c_[static_cast<std::size_t>(j)] += c_[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(j)];
    }
    return r;
  }

  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }
  /// Lexicographic on coefficients; only for canonical ordering.
  friend bool operator<(const Cyc& a, const Cyc& b) { return a.c_ < b.c_; }

  /// e.g. "2", "-1", "E(3)+E(3)^2"; E(m) denotes ζ_m.
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    const int m = f_ ? f_->conductor() : 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const Rational& x = c_[i];
      if (x == 0) continue;
      std::ostringstream term;
      Rational ax = x < 0 ? Rational(-x) : x;
      if (i == 0) {
        term << ax;
      } else {
        if (ax != 1) term << ax << "*";
        term << "E(" << m << ")";
        if (i > 1) term << "^" << i;
      }
      if (first)
        os << (x < 0 ? "-" : "") << term.str();
      else
        os << (x < 0 ? "-" : "+") << term.str();
      first = false;
    }
    return first ? "0" : os.str();
  }

private:
  FieldPtr f_;
  std::vector<Rational> c_;
};

}  // namespace eqloc
