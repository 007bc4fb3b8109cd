#include "pws/poly_matrix.hpp"

#include <climits>
#include <map>
#include <stdexcept>
#include <utility>

namespace pws {

std::vector<EvenPoly> mat_vec(const PolyMatrix& m, std::span<const EvenPoly> x) {
  if (static_cast<int>(x.size()) != m.cols())
    throw std::invalid_argument("mat_vec: size mismatch");
  std::vector<EvenPoly> y(m.rows(), EvenPoly::zero(m.nvars()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() && !x[j].is_zero()) y[i] += m.at(i, j) * x[j];
  return y;
}

namespace {

// row/column elementary operations mirrored into the transform accumulators
struct SnfWork {
  PolyMatrix s, u, v;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < s.cols(); ++j) std::swap(s.at(a, j), s.at(b, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < s.rows(); ++i) std::swap(s.at(i, a), s.at(i, b));
    for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  // row[dst] += f * row[src]
  void row_axpy(int dst, int src, const EvenPoly& f) {
    if (f.is_zero()) return;
    for (int j = 0; j < s.cols(); ++j) s.at(dst, j) += f * s.at(src, j);
    for (int j = 0; j < u.cols(); ++j) u.at(dst, j) += f * u.at(src, j);
  }
  // col[dst] += f * col[src]
  void col_axpy(int dst, int src, const EvenPoly& f) {
    if (f.is_zero()) return;
    for (int i = 0; i < s.rows(); ++i) s.at(i, dst) += f * s.at(i, src);
    for (int i = 0; i < v.rows(); ++i) v.at(i, dst) += f * v.at(i, src);
  }
  void scale_row(int r, const Rational& c) {
    for (int j = 0; j < s.cols(); ++j) s.at(r, j) *= c;
    for (int j = 0; j < u.cols(); ++j) u.at(r, j) *= c;
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const PolyMatrix& m) {
  if (m.nvars() != 1)
    throw std::invalid_argument("smith_normal_form: univariate matrices only");
  const int rows = m.rows(), cols = m.cols();
  SnfWork w{m, PolyMatrix::identity(rows), PolyMatrix::identity(cols)};

  const int steps = std::min(rows, cols);
  for (int t = 0; t < steps; ++t) {
    // pivot: minimal degree among nonzero entries of the trailing block,
    // ties broken by smallest (row, col) lexicographically
    int pi = -1, pj = -1, best = INT_MAX;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        const EvenPoly& e = w.s.at(i, j);
        if (!e.is_zero() && e.degree() < best) {
          best = e.degree();
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (bool settled = false; !settled;) {
      settled = true;
      // clear column t below the pivot
      for (int i = t + 1; i < rows; ++i) {
        if (w.s.at(i, t).is_zero()) continue;
        auto [q, r] = divrem(w.s.at(i, t), w.s.at(t, t));
        w.row_axpy(i, t, -q);
        if (!r.is_zero()) {  // smaller-degree remainder becomes the pivot
          w.swap_rows(t, i);
          settled = false;
        }
      }
      if (!settled) continue;
      // clear row t right of the pivot
      for (int j = t + 1; j < cols; ++j) {
        if (w.s.at(t, j).is_zero()) continue;
        auto [q, r] = divrem(w.s.at(t, j), w.s.at(t, t));
        w.col_axpy(j, t, -q);
        if (!r.is_zero()) {
          w.swap_cols(t, j);
          settled = false;
        }
      }
      if (!settled) continue;
      // divisibility: pivot must divide every remaining entry; if not, pull
      // the offending row into row t and reduce again
      for (int i = t + 1; i < rows && settled; ++i)
        for (int j = t + 1; j < cols && settled; ++j) {
          if (w.s.at(i, j).is_zero()) continue;
          if (!divide_exact(w.s.at(i, j), w.s.at(t, t))) {
            w.row_axpy(t, i, EvenPoly::one());
            settled = false;
          }
        }
    }

    const Rational lc = w.s.at(t, t).leading_coeff();
    if (lc != Rational(1)) w.scale_row(t, Rational(1) / lc);
  }
  return {w.u, w.s, w.v};
}

std::vector<std::vector<EvenPoly>> kernel_basis(const PolyMatrix& m) {
  SmithDecomposition d = smith_normal_form(m);
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<EvenPoly>> basis;
  for (int j = 0; j < cols; ++j) {
    const bool diag_zero = j >= rows || d.s.at(j, j).is_zero();
    if (!diag_zero) continue;
    std::vector<EvenPoly> col(cols, EvenPoly::zero());
    for (int i = 0; i < cols; ++i) col[i] = d.v.at(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

std::optional<std::vector<EvenPoly>> solve_linear(const PolyMatrix& m,
                                                  std::span<const EvenPoly> b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("solve_linear: rhs size mismatch");
  SmithDecomposition d = smith_normal_form(m);
  const int rows = m.rows(), cols = m.cols();
  // y = U b; then S z = y is solvable iff each row is (exactly divisible or 0=0)
  std::vector<EvenPoly> y = mat_vec(d.u, b);
  std::vector<EvenPoly> z(cols, EvenPoly::zero());
  for (int i = 0; i < rows; ++i) {
    const bool have_diag = i < cols && !d.s.at(i, i).is_zero();
    if (have_diag) {
      auto q = divide_exact(y[i], d.s.at(i, i));
      if (!q) return std::nullopt;
      z[i] = *q;
    } else if (!y[i].is_zero()) {
      return std::nullopt;
    }
  }
  return mat_vec(d.v, z);
}

EvenPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrices only");
  const int n = m.rows();
  if (n == 0) return EvenPoly::one(m.nvars());
  PolyMatrix b = m;
  int sign = 1;
  EvenPoly prev = EvenPoly::one(m.nvars());
  for (int k = 0; k + 1 < n; ++k) {
    if (b.at(k, k).is_zero()) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (!b.at(i, k).is_zero()) {
          swap = i;
          break;
        }
      if (swap < 0) return EvenPoly::zero(m.nvars());
      for (int j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        EvenPoly num = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("determinant: Bareiss division failed");
        b.at(i, j) = *q;
      }
      b.at(i, k) = EvenPoly::zero(m.nvars());
    }
    prev = b.at(k, k);
  }
  EvenPoly det = b.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

std::vector<std::vector<int>> monomials_up_to(int nvars, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nvars, 0);
  // lexicographic enumeration of exponent vectors with sum <= cap
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == nvars) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  if (cap >= 0) rec(rec, 0, cap);
  return out;
}

std::optional<std::vector<EvenPoly>> mv_bounded_solve(const PolyMatrix& a,
                                                      std::span<const EvenPoly> b,
                                                      int degree_cap) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("mv_bounded_solve: rhs size mismatch");
  if (degree_cap < 0) throw std::invalid_argument("mv_bounded_solve: degree_cap must be >= 0");
  const int nv = a.nvars();
  int deg_b = EvenPoly::kZeroDegree;
  for (const auto& p : b) deg_b = std::max(deg_b, p.degree());

  // start at deg b (smaller solutions still live in that coefficient space),
  // clamped so the cap itself is always tried
  for (int cap = std::min(std::max(deg_b, 0), degree_cap); cap <= degree_cap; ++cap) {
    const std::vector<std::vector<int>> monos = monomials_up_to(nv, cap);
    const int per_col = static_cast<int>(monos.size());
    const int nunk = per_col * a.cols();

    // one scalar equation per (row of a, monomial of the expanded identity)
    std::map<std::pair<int, std::vector<int>>, int> eq_index;
    auto eq_of = [&](int row, const std::vector<int>& e) {
      auto [it, fresh] = eq_index.try_emplace({row, e}, static_cast<int>(eq_index.size()));
      (void)fresh;
      return it->second;
    };
    struct Entry {
      int eq, unk;
      Rational c;
    };
    std::vector<Entry> lhs;
    std::vector<std::pair<int, Rational>> rhs_entries;
    for (int i = 0; i < a.rows(); ++i) {
      b[i].for_each_term([&](const std::vector<int>& e, const Rational& c) {
        rhs_entries.emplace_back(eq_of(i, e), c);
      });
      for (int j = 0; j < a.cols(); ++j) {
        if (a.at(i, j).is_zero()) continue;
        for (int mi = 0; mi < per_col; ++mi) {
          const int unk = j * per_col + mi;
          a.at(i, j).for_each_term([&](const std::vector<int>& e, const Rational& c) {
            std::vector<int> sum(e);
            for (int k = 0; k < nv; ++k) sum[k] += monos[mi][k];
            lhs.push_back({eq_of(i, sum), unk, c});
          });
        }
      }
    }

    // no equations at all: a is the zero matrix and b vanishes, so any h works
    if (eq_index.empty()) return std::vector<EvenPoly>(a.cols(), EvenPoly::zero(nv));

    RatMatrix sys(eq_index.size(), RatVector(nunk, Rational(0)));
    RatVector rhs(eq_index.size(), Rational(0));
    for (const auto& en : lhs) sys[en.eq][en.unk] += en.c;
    for (const auto& [eq, c] : rhs_entries) rhs[eq] += c;

    auto sol = lin_solve(std::move(sys), std::move(rhs));
    if (!sol) continue;
    std::vector<EvenPoly> h;
    h.reserve(a.cols());
    for (int j = 0; j < a.cols(); ++j) {
      std::vector<std::pair<std::vector<int>, Rational>> terms;
      for (int mi = 0; mi < per_col; ++mi) terms.emplace_back(monos[mi], (*sol)[j * per_col + mi]);
      h.push_back(EvenPoly::from_terms(nv, terms));
    }
    return h;
  }
  return std::nullopt;
}

}  // namespace pws
