#ifndef YGZ_POLY_HPP
#define YGZ_POLY_HPP

// Univariate polynomials and rational functions over exact rationals.
// Coefficients are stored lowest degree first with no trailing zeros.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ygz/rational.hpp"

namespace ygz {

struct ZeroPolynomial : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& a) { return Poly(std::vector<Rat>{a}); }
  static Poly one() { return constant(Rat(1)); }
  // u + a
  static Poly linear(const Rat& a) { return Poly({a, Rat(1)}); }

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
  }
  Rat leading() const {
    if (is_zero()) throw ZeroPolynomial("leading coefficient of 0");
    return c_.back();
  }

  Rat operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Rat> r(std::max(p.c_.size(), q.c_.size()), Rat(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& p, const Poly& q) {
    std::vector<Rat> r(std::max(p.c_.size(), q.c_.size()), Rat(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<Rat> r(p.c_.size() + q.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Rat& a, const Poly& p) {
    std::vector<Rat> r = p.c_;
    for (auto& x : r) x *= a;
    return Poly(std::move(r));
  }
  Poly operator-() const { return Rat(-1) * *this; }
  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return Poly(std::move(r));
  }

  // p(u + h), by Horner in (u + h).
  Poly shifted(const Rat& h) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * Poly::linear(h) + Poly::constant(*it);
    return acc;
  }

  Poly monic() const {
    if (is_zero()) throw ZeroPolynomial("monic of 0");
    Rat inv = Rat(1) / c_.back();
    return inv * *this;
  }

  // Quotient and remainder, deg rem < deg divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroPolynomial("division by zero polynomial");
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quot;
    int db = b.degree();
    if (a.degree() >= db) quot.assign(a.degree() - db + 1, Rat(0));
    while (static_cast<int>(rem.size()) - 1 >= db) {
      int k = static_cast<int>(rem.size()) - 1 - db;
      Rat f = rem.back() / b.c_.back();
      quot[k] = f;
      for (int i = 0; i <= db; ++i) rem[k + i] -= f * b.c_[i];
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = b;
      b = r;
    }
    return a.is_zero() ? a : a.monic();
  }

  std::string str(const std::string& var = "u") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      Rat a = c_[k];
      if (a == 0) continue;
      if (!out.empty()) out += (a > 0) ? " + " : " - ";
      else if (a < 0) out += "-";
      Rat mag = abs(a);
      bool unit = (mag == 1) && k > 0;
      if (!unit) out += rat_str(mag);
      if (k > 0) {
        if (!unit) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline bool is_squarefree(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree test of 0");
  return Poly::gcd(p, p.derivative()).degree() <= 0;
}

// num/den with gcd(num, den) = 1 and monic den.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Poly::one()) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  static RationalFunction one() { return RationalFunction(Poly::one(), Poly::one()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
  }
  friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
    if (g.num_.is_zero()) throw ZeroPolynomial("division by zero rational function");
    return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
  }
  friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
  }
  friend bool operator!=(const RationalFunction& f, const RationalFunction& g) {
    return !(f == g);
  }

  // f(u + h)
  RationalFunction shifted(const Rat& h) const {
    return RationalFunction(num_.shifted(h), den_.shifted(h));
  }

  Rat operator()(const Rat& x) const {
    Rat d = den_(x);
    if (d == 0) throw std::runtime_error("rational function pole");
    return num_(x) / d;
  }

  std::string str(const std::string& var = "u") const {
    if (den_ == Poly::one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw ZeroPolynomial("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::one();
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
    Rat lead = den_.leading();
    Rat inv = Rat(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
  Poly num_, den_;
};

}  // namespace ygz

#endif  // YGZ_POLY_HPP
