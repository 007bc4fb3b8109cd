#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <complex>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pws/rational.hpp"

namespace pws {

// Variable-name tags.  EvenPoly lives in t (t_f = lambda_f^2), LambdaPoly in
// lambda; keeping them distinct types stops the two coordinate systems from
// mixing silently.
struct TVarTag {
  static std::string name(int nvars, int i) {
    return nvars == 1 ? "t" : "t" + std::to_string(i + 1);
  }
};
struct LambdaVarTag {
  static std::string name(int nvars, int i) {
    return nvars == 1 ? "λ" : "λ" + std::to_string(i + 1);
  }
};

// Polynomial over Rational in nvars >= 1 variables.  Univariate polynomials
// use a dense coefficient vector, multivariate ones a sparse exponent-vector
// map ordered lexicographically.  The zero polynomial has empty storage and
// degree() == kZeroDegree.
template <class Tag>
class BasicPoly {
 public:
  static constexpr int kZeroDegree = -1;  // degree of the zero polynomial

  BasicPoly() : nvars_(1) {}
  explicit BasicPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("poly: nvars must be >= 1");
  }

  static BasicPoly zero(int nvars = 1) { return BasicPoly(nvars); }

  static BasicPoly constant(const Rational& c, int nvars = 1) {
    BasicPoly p(nvars);
    if (c.is_zero()) return p;
    if (nvars == 1) {
      p.dense_.push_back(c);
    } else {
      p.terms_[std::vector<int>(nvars, 0)] = c;
    }
    return p;
  }

  static BasicPoly one(int nvars = 1) { return constant(Rational(1), nvars); }

  // the monomial x_var (0-based variable index)
  static BasicPoly variable(int var = 0, int nvars = 1) {
    if (var < 0 || var >= nvars) throw std::invalid_argument("poly: variable index out of range");
    BasicPoly p(nvars);
    if (nvars == 1) {
      p.dense_ = {Rational(0), Rational(1)};
    } else {
      std::vector<int> e(nvars, 0);
      e[var] = 1;
      p.terms_[e] = Rational(1);
    }
    return p;
  }

  static BasicPoly from_coeffs(std::vector<Rational> c) {
    BasicPoly p(1);
    p.dense_ = std::move(c);
    p.trim();
    return p;
  }

  static BasicPoly from_terms(int nvars,
                              const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
    BasicPoly p(nvars);
    for (const auto& [e, c] : terms) {
      if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("poly: exponent vector length != nvars");
      for (int k : e)
        if (k < 0) throw std::invalid_argument("poly: negative exponent");
      if (c.is_zero()) continue;
      if (nvars == 1) {
        int d = e[0];
        if (static_cast<int>(p.dense_.size()) <= d) p.dense_.resize(d + 1);
        p.dense_[d] += c;
      } else {
        auto it = p.terms_.find(e);
        if (it == p.terms_.end())
          p.terms_[e] = c;
        else if ((it->second += c).is_zero())
          p.terms_.erase(it);
      }
    }
    p.trim();
    return p;
  }

  // embed a univariate polynomial as a polynomial in variable `var` of an
  // nvars-variable ring (used for per-factor twist polynomials)
  static BasicPoly embed(const BasicPoly& uni, int var, int nvars) {
    if (uni.nvars_ != 1) throw std::invalid_argument("poly: embed expects univariate input");
    if (var < 0 || var >= nvars) throw std::invalid_argument("poly: embed variable out of range");
    if (nvars == 1) return uni;
    BasicPoly p(nvars);
    for (int k = 0; k < static_cast<int>(uni.dense_.size()); ++k) {
      if (uni.dense_[k].is_zero()) continue;
      std::vector<int> e(nvars, 0);
      e[var] = k;
      p.terms_[e] = uni.dense_[k];
    }
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return nvars_ == 1 ? dense_.empty() : terms_.empty(); }

  // total degree; kZeroDegree for the zero polynomial
  int degree() const {
    if (nvars_ == 1) return static_cast<int>(dense_.size()) - 1;
    int d = kZeroDegree;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  int degree_in(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("poly: variable index out of range");
    if (nvars_ == 1) return degree();
    int d = kZeroDegree;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  // univariate coefficient access
  Rational coeff(int k) const {
    if (nvars_ != 1) throw std::invalid_argument("poly: coeff(int) needs univariate");
    if (k < 0 || k >= static_cast<int>(dense_.size())) return Rational(0);
    return dense_[k];
  }

  Rational coeff(const std::vector<int>& e) const {
    if (static_cast<int>(e.size()) != nvars_)
      throw std::invalid_argument("poly: exponent vector length != nvars");
    if (nvars_ == 1) return coeff(e[0]);
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // leading coefficient: top coefficient univariate, lex-leading multivariate
  Rational leading_coeff() const {
    if (is_zero()) return Rational(0);
    return nvars_ == 1 ? dense_.back() : terms_.rbegin()->second;
  }

  const std::vector<Rational>& coeffs() const {
    if (nvars_ != 1) throw std::invalid_argument("poly: coeffs() needs univariate");
    return dense_;
  }

  template <class Fn>
  void for_each_term(Fn&& fn) const {
    if (nvars_ == 1) {
      for (int k = 0; k < static_cast<int>(dense_.size()); ++k)
        if (!dense_[k].is_zero()) fn(std::vector<int>{k}, dense_[k]);
    } else {
      for (const auto& [e, c] : terms_) fn(e, c);
    }
  }

  BasicPoly operator-() const {
    BasicPoly p(*this);
    for (auto& c : p.dense_) c = -c;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  BasicPoly& operator+=(const BasicPoly& o) { return axpy(o, Rational(1)); }
  BasicPoly& operator-=(const BasicPoly& o) { return axpy(o, Rational(-1)); }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    a.check_same_ring(b);
    BasicPoly p(a.nvars_);
    if (a.is_zero() || b.is_zero()) return p;
    if (a.nvars_ == 1) {
      p.dense_.assign(a.dense_.size() + b.dense_.size() - 1, Rational(0));
      for (size_t i = 0; i < a.dense_.size(); ++i) {
        if (a.dense_[i].is_zero()) continue;
        for (size_t j = 0; j < b.dense_.size(); ++j)
          if (!b.dense_[j].is_zero()) p.dense_[i + j] += a.dense_[i] * b.dense_[j];
      }
      p.trim();
    } else {
      for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
          std::vector<int> e(a.nvars_);
          for (int k = 0; k < a.nvars_; ++k) e[k] = ea[k] + eb[k];
          auto it = p.terms_.find(e);
          if (it == p.terms_.end()) {
            Rational c = ca * cb;
            if (!c.is_zero()) p.terms_[std::move(e)] = c;
          } else if ((it->second += ca * cb).is_zero()) {
            p.terms_.erase(it);
          }
        }
      }
    }
    return p;
  }

  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  friend BasicPoly operator*(BasicPoly a, const Rational& c) {
    if (c.is_zero()) return BasicPoly(a.nvars_);
    for (auto& x : a.dense_) x *= c;
    for (auto& [e, x] : a.terms_) x *= c;
    return a;
  }
  friend BasicPoly operator*(const Rational& c, BasicPoly a) { return std::move(a) * c; }
  BasicPoly& operator*=(const Rational& c) { return *this = *this * c; }
  friend BasicPoly operator/(BasicPoly a, const Rational& c) {
    if (c.is_zero()) throw std::domain_error("poly: division by zero scalar");
    for (auto& x : a.dense_) x /= c;
    for (auto& [e, x] : a.terms_) x /= c;
    return a;
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.nvars_ == b.nvars_ && a.dense_ == b.dense_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

  std::complex<double> eval(std::span<const std::complex<double>> z) const {
    if (static_cast<int>(z.size()) != nvars_)
      throw std::invalid_argument("poly: eval point has wrong dimension");
    if (nvars_ == 1) {
      std::complex<double> acc = 0.0;
      for (auto it = dense_.rbegin(); it != dense_.rend(); ++it) acc = acc * z[0] + it->to_double();
      return acc;
    }
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
      std::complex<double> m = c.to_double();
      for (int k = 0; k < nvars_; ++k)
        for (int p = 0; p < e[k]; ++p) m *= z[k];
      acc += m;
    }
    return acc;
  }

  std::complex<double> eval1(std::complex<double> z) const {
    const std::complex<double> pt[1] = {z};
    return eval(pt);
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    auto emit = [&](const std::vector<int>& e, const Rational& c) {
      bool neg = c.sign() < 0;
      Rational a = neg ? -c : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono;
      for (int k = 0; k < nvars_; ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += Tag::name(nvars_, k);
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      if (mono.empty()) {
        out += a.str();
      } else {
        if (a != Rational(1)) out += a.str() + "*";
        out += mono;
      }
    };
    if (nvars_ == 1) {
      for (int k = static_cast<int>(dense_.size()) - 1; k >= 0; --k)
        if (!dense_[k].is_zero()) emit({k}, dense_[k]);
    } else {
      // descending lex so the leading term prints first
      for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) emit(it->first, it->second);
    }
    return out;
  }

  void check_same_ring(const BasicPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("poly: mixed variable counts");
  }

 private:
  BasicPoly& axpy(const BasicPoly& o, const Rational& s) {
    check_same_ring(o);
    if (nvars_ == 1) {
      if (o.dense_.size() > dense_.size()) dense_.resize(o.dense_.size());
      for (size_t k = 0; k < o.dense_.size(); ++k) dense_[k] += s * o.dense_[k];
      trim();
    } else {
      for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
          Rational v = s * c;
          if (!v.is_zero()) terms_[e] = v;
        } else if ((it->second += s * c).is_zero()) {
          terms_.erase(it);
        }
      }
    }
    return *this;
  }

  void trim() {
    while (!dense_.empty() && dense_.back().is_zero()) dense_.pop_back();
  }

  int nvars_;
  std::vector<Rational> dense_;                // used when nvars_ == 1
  std::map<std::vector<int>, Rational> terms_;  // used when nvars_ > 1, lex-ordered
};

using EvenPoly = BasicPoly<TVarTag>;
using LambdaPoly = BasicPoly<LambdaVarTag>;

// ---- univariate division with remainder ------------------------------------

template <class Tag>
std::pair<BasicPoly<Tag>, BasicPoly<Tag>> divrem(const BasicPoly<Tag>& a, const BasicPoly<Tag>& b) {
  if (a.nvars() != 1 || b.nvars() != 1)
    throw std::invalid_argument("divrem: univariate polynomials only");
  if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
  BasicPoly<Tag> r = a;
  std::vector<Rational> q(std::max(0, a.degree() - b.degree() + 1), Rational(0));
  const Rational lb = b.leading_coeff();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rational c = r.leading_coeff() / lb;
    q[k] += c;
    // r -= c * x^k * b
    std::vector<Rational> shift(k, Rational(0));
    shift.push_back(c);
    r -= BasicPoly<Tag>::from_coeffs(std::move(shift)) * b;
  }
  return {BasicPoly<Tag>::from_coeffs(std::move(q)), r};
}

// ---- exact division test (any number of variables) -------------------------

// returns a/b when b divides a exactly, std::nullopt otherwise
template <class Tag>
std::optional<BasicPoly<Tag>> divide_exact(const BasicPoly<Tag>& a, const BasicPoly<Tag>& b) {
  a.check_same_ring(b);
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (a.is_zero()) return BasicPoly<Tag>::zero(a.nvars());
  if (a.nvars() == 1) {
    auto [q, r] = divrem(a, b);
    if (r.is_zero()) return q;
    return std::nullopt;
  }
  // single-divisor reduction in lex order: if an exact quotient exists the
  // leading term of the running remainder is always divisible by lt(b)
  BasicPoly<Tag> r = a;
  BasicPoly<Tag> q(a.nvars());
  std::vector<int> eb;
  b.for_each_term([&](const std::vector<int>& e, const Rational&) { eb = e; });  // last = lex lead
  const Rational cb = b.leading_coeff();
  while (!r.is_zero()) {
    std::vector<int> er;
    r.for_each_term([&](const std::vector<int>& e, const Rational&) { er = e; });
    bool divides = true;
    std::vector<int> diff(a.nvars());
    for (int k = 0; k < a.nvars(); ++k) {
      diff[k] = er[k] - eb[k];
      if (diff[k] < 0) divides = false;
    }
    if (!divides) return std::nullopt;
    BasicPoly<Tag> mono = BasicPoly<Tag>::from_terms(a.nvars(), {{diff, r.coeff(er) / cb}});
    q += mono;
    r -= mono * b;
  }
  return q;
}

// ---- extended Euclid / Bezout over the univariate ring ----------------------

template <class Tag>
struct BezoutResult {
  BasicPoly<Tag> g;                    // monic gcd
  std::vector<BasicPoly<Tag>> coeffs;  // sum coeffs[j] * items[j] == g
};

template <class Tag>
std::array<BasicPoly<Tag>, 3> extended_gcd(const BasicPoly<Tag>& a, const BasicPoly<Tag>& b) {
  using P = BasicPoly<Tag>;
  P r0 = a, r1 = b, s0 = P::one(), s1 = P::zero(), t0 = P::zero(), t1 = P::one();
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  return {r0, s0, t0};  // r0 = s0*a + t0*b
}

// gcd of a list with Bezout witnesses; zero entries get coefficient 0.
// Throws domain_error when every entry is zero (the zero ideal has no gcd here).
template <class Tag>
BezoutResult<Tag> gcd_bezout(std::span<const BasicPoly<Tag>> items) {
  using P = BasicPoly<Tag>;
  BezoutResult<Tag> out;
  out.coeffs.assign(items.size(), P::zero());
  int first = -1;
  for (size_t j = 0; j < items.size(); ++j) {
    if (items[j].nvars() != 1) throw std::invalid_argument("gcd_bezout: univariate only");
    if (first < 0 && !items[j].is_zero()) first = static_cast<int>(j);
  }
  if (first < 0) throw std::domain_error("gcd_bezout: all generators are zero (zero ideal)");
  out.g = items[first];
  out.coeffs[first] = P::one();
  for (size_t j = first + 1; j < items.size(); ++j) {
    if (items[j].is_zero()) continue;
    auto [d, x, y] = extended_gcd(out.g, items[j]);
    for (auto& c : out.coeffs) c = x * c;
    out.coeffs[j] = y;
    out.g = d;
  }
  Rational lc = out.g.leading_coeff();
  out.g = out.g / lc;
  for (auto& c : out.coeffs) c = c / lc;
  return out;
}

template <class Tag>
BezoutResult<Tag> gcd_bezout(const std::vector<BasicPoly<Tag>>& items) {
  return gcd_bezout(std::span<const BasicPoly<Tag>>(items));
}

// ---- passage between the lambda and t coordinates ---------------------------

// h(t) -> h(lambda^2): every exponent doubles, variable count is preserved
inline LambdaPoly expand_even(const EvenPoly& h) {
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  h.for_each_term([&](const std::vector<int>& e, const Rational& c) {
    std::vector<int> e2(e);
    for (int& k : e2) k *= 2;
    terms.emplace_back(std::move(e2), c);
  });
  return LambdaPoly::from_terms(h.nvars(), terms);
}

// average of p over all 2^d sign flips of the variables, re-expressed in t.
// Terms with any odd exponent cancel in the average; even terms survive as-is.
inline EvenPoly symmetrize_even(const LambdaPoly& p) {
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  p.for_each_term([&](const std::vector<int>& e, const Rational& c) {
    std::vector<int> half(e);
    for (int& k : half) {
      if (k % 2 != 0) return;  // killed by the sign average
      k /= 2;
    }
    terms.emplace_back(std::move(half), c);
  });
  return EvenPoly::from_terms(p.nvars(), terms);
}

}  // namespace pws
