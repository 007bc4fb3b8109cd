#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pws/linalg.hpp"
#include "pws/poly.hpp"

namespace pws {

// dense row-major matrix with EvenPoly entries
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0), nvars_(1) {}
  PolyMatrix(int rows, int cols, int nvars = 1)
      : rows_(rows), cols_(cols), nvars_(nvars),
        entries_(static_cast<size_t>(rows) * cols, EvenPoly::zero(nvars)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix: negative dimension");
  }

  static PolyMatrix identity(int n, int nvars = 1) {
    PolyMatrix m(n, n, nvars);
    for (int i = 0; i < n; ++i) m.at(i, i) = EvenPoly::one(nvars);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }

  EvenPoly& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const EvenPoly& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  // max total degree over entries; kZeroDegree for the zero matrix
  int max_degree() const {
    int d = EvenPoly::kZeroDegree;
    for (const auto& e : entries_) d = std::max(d, e.degree());
    return d;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
    PolyMatrix p(a.rows_, b.cols_, a.nvars_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j)
          if (!b.at(k, j).is_zero()) p.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return p;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  int rows_, cols_, nvars_;
  std::vector<EvenPoly> entries_;
};

std::vector<EvenPoly> mat_vec(const PolyMatrix& m, std::span<const EvenPoly> x);

// Smith normal form over Q[t]: u * input * v == s with u, v invertible,
// s diagonal, diagonal entries monic and forming a divisibility chain
struct SmithDecomposition {
  PolyMatrix u, s, v;
};

SmithDecomposition smith_normal_form(const PolyMatrix& m);

// basis of { x in Q[t]^cols : m x = 0 } read off the Smith form
std::vector<std::vector<EvenPoly>> kernel_basis(const PolyMatrix& m);

// exact solution of m x = b over Q[t] via the Smith form, or nullopt
std::optional<std::vector<EvenPoly>> solve_linear(const PolyMatrix& m, std::span<const EvenPoly> b);

// Bareiss fraction-free determinant (square matrices, any variable count)
EvenPoly determinant(const PolyMatrix& m);

// Degree-bounded linear solve in any number of variables: looks for a
// solution whose components have total degree <= degree_cap by solving the
// exact rational system on coefficient vectors, smallest degree first.
// nullopt means "no solution within the cap" (inconclusive for nvars > 1).
std::optional<std::vector<EvenPoly>> mv_bounded_solve(const PolyMatrix& a,
                                                      std::span<const EvenPoly> b, int degree_cap);

// all exponent vectors in `nvars` variables with total degree <= cap
std::vector<std::vector<int>> monomials_up_to(int nvars, int cap);

}  // namespace pws
