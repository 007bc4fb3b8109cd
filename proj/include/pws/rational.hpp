#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace pws {

// Exact rational number. Thin wrapper over GMP's mpq_class that keeps the
// value canonical (reduced, positive denominator) through every constructor,
// which mpq_class itself only guarantees after arithmetic.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // accepts "p", "-p", "p/q"
  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  double to_double() const { return v_.get_d(); }

  // canonical form: "p" when the denominator is 1, else "p/q"
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace pws
