#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pws/poly.hpp"

namespace pws {

// Hom_M vanishes between K-types of different parity; operations that would
// need a map through such a zero space raise this.
struct ParityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A character of K = SO(2)^d: an integer weight per factor.  Rank 1 is the
// SL(2,R) case, rank d >= 2 the product SL(2,R)^d.
class KType {
 public:
  KType() : w_{0} {}
  explicit KType(int w) : w_{w} {}
  explicit KType(std::vector<int> w) : w_(std::move(w)) {
    if (w_.empty()) throw std::invalid_argument("KType: empty weight tuple");
  }

  int rank() const { return static_cast<int>(w_.size()); }
  int weight(int f) const { return w_.at(f); }
  const std::vector<int>& weights() const { return w_; }

  // rank-1 convenience accessor
  int value() const {
    if (rank() != 1) throw std::invalid_argument("KType: value() needs rank 1");
    return w_[0];
  }

  friend bool operator==(const KType& a, const KType& b) { return a.w_ == b.w_; }
  friend bool operator!=(const KType& a, const KType& b) { return a.w_ != b.w_; }
  friend bool operator<(const KType& a, const KType& b) { return a.w_ < b.w_; }

  std::string str() const {
    if (rank() == 1) return std::to_string(w_[0]);
    std::string s = "(";
    for (int f = 0; f < rank(); ++f) {
      if (f) s += ",";
      s += std::to_string(w_[f]);
    }
    return s + ")";
  }

 private:
  std::vector<int> w_;
};

bool parity_compatible(const KType& n, const KType& m);

// q_{n,m}: the minimal-degree polynomial with Hom_M-intertwining divisibility;
// lambda-degree is sum_f |n_f - m_f| / 2
struct TwistGenerator {
  KType source;  // n
  KType target;  // m
  LambdaPoly poly;
};

TwistGenerator q_poly(const KType& n, const KType& m);

// r^l_{n,m}: the even polynomial with q_{n,m} q_{l,n} = r^l_{n,m} q_{l,m}
EvenPoly r_poly(const KType& l, const KType& n, const KType& m);

// rho_k vanishes for the supported abelian K; kept as data so the Casimir
// formula below stays the general |mu+rho|^2 - |rho|^2
std::vector<Rational> rho_k(int rank);

Rational casimir_eigenvalue(const KType& mu);

}  // namespace pws
