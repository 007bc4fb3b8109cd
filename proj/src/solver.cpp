#include "pws/solver.hpp"

#include <utility>

namespace pws {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::solved: return "solved";
    case SolveStatus::unsolvable: return "unsolvable";
    case SolveStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::bezout_single_row: return "bezout_single_row";
    case SolveMethod::snf_direct: return "snf_direct";
    case SolveMethod::row_induction: return "row_induction";
    case SolveMethod::bounded_degree: return "bounded_degree";
  }
  return "?";
}

const char* to_string(Exactness e) {
  switch (e) {
    case Exactness::exact: return "exact";
    case Exactness::im_strictly_smaller: return "im_strictly_smaller";
    case Exactness::not_complex: return "not_complex";
  }
  return "?";
}

namespace {

const char* kNotDivides = " ∤ ";  // " ∤ "

// Bezout solve of one untwisted row: sum_j row[j] v_j = b
std::optional<std::vector<EvenPoly>> solve_row_bezout(std::span<const EvenPoly> row,
                                                      const EvenPoly& b, std::string* cert) {
  bool all_zero = true;
  for (const auto& a : row)
    if (!a.is_zero()) all_zero = false;
  if (all_zero) {
    if (b.is_zero()) return std::vector<EvenPoly>(row.size(), EvenPoly::zero());
    if (cert) *cert = "0" + std::string(kNotDivides) + b.str();
    return std::nullopt;
  }
  BezoutResult<TVarTag> bez = gcd_bezout(row);
  auto beta = divide_exact(b, bez.g);
  if (!beta) {
    if (cert) *cert = bez.g.str() + kNotDivides + b.str();
    return std::nullopt;
  }
  std::vector<EvenPoly> v;
  v.reserve(row.size());
  for (const auto& r : bez.coeffs) v.push_back(*beta * r);
  return v;
}

// SNF solve with a divisibility witness on failure
std::optional<std::vector<EvenPoly>> solve_snf(const PolyMatrix& a, std::span<const EvenPoly> b,
                                               std::string* cert) {
  SmithDecomposition d = smith_normal_form(a);
  std::vector<EvenPoly> y = mat_vec(d.u, b);
  std::vector<EvenPoly> z(a.cols(), EvenPoly::zero());
  for (int i = 0; i < a.rows(); ++i) {
    const bool have_diag = i < a.cols() && !d.s.at(i, i).is_zero();
    if (have_diag) {
      auto q = divide_exact(y[i], d.s.at(i, i));
      if (!q) {
        if (cert) *cert = d.s.at(i, i).str() + kNotDivides + y[i].str();
        return std::nullopt;
      }
      z[i] = *q;
    } else if (!y[i].is_zero()) {
      if (cert) *cert = "0" + std::string(kNotDivides) + y[i].str();
      return std::nullopt;
    }
  }
  return mat_vec(d.v, z);
}

// induction on rows: Bezout on the first row, then recurse on the
// remaining rows restricted to the kernel of the first
std::optional<std::vector<EvenPoly>> solve_rows_induction(const PolyMatrix& a,
                                                          std::span<const EvenPoly> b,
                                                          std::string* cert) {
  const int rows = a.rows(), cols = a.cols();
  std::vector<EvenPoly> row0(cols, EvenPoly::zero());
  for (int j = 0; j < cols; ++j) row0[j] = a.at(0, j);
  auto v1 = solve_row_bezout(row0, b[0], cert);
  if (!v1) return std::nullopt;
  if (rows == 1) return v1;

  PolyMatrix first(1, cols);
  for (int j = 0; j < cols; ++j) first.at(0, j) = row0[j];
  const std::vector<std::vector<EvenPoly>> ker = kernel_basis(first);
  const int nk = static_cast<int>(ker.size());

  // restrict the remaining rows to v1 + K f
  PolyMatrix rest(rows - 1, nk);
  std::vector<EvenPoly> rhs(rows - 1, EvenPoly::zero());
  for (int i = 1; i < rows; ++i) {
    EvenPoly shift = EvenPoly::zero();
    for (int j = 0; j < cols; ++j) shift += a.at(i, j) * (*v1)[j];
    rhs[i - 1] = b[i] - shift;
    for (int k = 0; k < nk; ++k) {
      EvenPoly e = EvenPoly::zero();
      for (int j = 0; j < cols; ++j) e += a.at(i, j) * ker[k][j];
      rest.at(i - 1, k) = e;
    }
  }

  std::optional<std::vector<EvenPoly>> f;
  if (nk == 0) {
    // injective first row: nothing left to adjust, the shift must already match
    for (int i = 0; i < rows - 1; ++i) {
      if (!rhs[i].is_zero()) {
        if (cert) *cert = "0" + std::string(kNotDivides) + rhs[i].str();
        return std::nullopt;
      }
    }
    f.emplace();
  } else {
    f = solve_rows_induction(rest, rhs, cert);
    if (!f) return std::nullopt;
  }

  std::vector<EvenPoly> v = *v1;
  for (int k = 0; k < nk; ++k)
    for (int j = 0; j < cols; ++j) v[j] += (*f)[k] * ker[k][j];
  return v;
}

int default_cap(const PolyMatrix& a, std::span<const EvenPoly> b) {
  int deg_a = std::max(a.max_degree(), 0);
  int deg_b = 0;
  for (const auto& p : b) deg_b = std::max(deg_b, p.degree());
  return 2 * (deg_a + deg_b) + 4;
}

void check_rhs(const Level3Operator& p, const Level3Vector& w, const KType& l) {
  if (w.ktype != l) throw std::invalid_argument("solve: rhs lives at a different K-type");
  if (w.targets() != p.targets())
    throw std::invalid_argument("solve: rhs targets must match operator targets");
}

}  // namespace

SolveReport solve_single_row(const Level3Operator& p, const Level3Element& w, const KType& l) {
  if (p.rows() != 1) throw std::invalid_argument("solve_single_row: operator must have one target");
  if (w.target != p.targets()[0])
    throw std::invalid_argument("solve_single_row: rhs target mismatch");
  if (w.source != l) throw std::invalid_argument("solve_single_row: rhs lives at a different K-type");

  const PolyMatrix a = untwist(p, l);
  SolveReport rep;
  if (p.rank() > 1) {
    // product group: fall back to the degree-bounded search on the one row
    const std::vector<EvenPoly> b{w.h};
    const int cap = default_cap(a, b);
    rep.method = SolveMethod::bounded_degree;
    auto h = mv_bounded_solve(a, b, cap);
    if (h) {
      rep.status = SolveStatus::solved;
      rep.solution = Level3Vector::make(l, p.sources(), std::move(*h));
    } else {
      rep.status = SolveStatus::inconclusive;
      rep.certificate = "no solution with component total degree <= " + std::to_string(cap);
    }
    return rep;
  }

  std::vector<EvenPoly> row(p.cols(), EvenPoly::zero());
  for (int j = 0; j < p.cols(); ++j) row[j] = a.at(0, j);
  rep.method = SolveMethod::bezout_single_row;
  auto v = solve_row_bezout(row, w.h, &rep.certificate);
  if (v) {
    rep.status = SolveStatus::solved;
    rep.solution = Level3Vector::make(l, p.sources(), std::move(*v));
  } else {
    rep.status = SolveStatus::unsolvable;
  }
  return rep;
}

SolveReport solve_system(const Level3Operator& p, const Level3Vector& w, const KType& l,
                         const SolveOptions& options) {
  check_rhs(p, w, l);
  const PolyMatrix a = untwist(p, l);
  const std::vector<EvenPoly> b = w.h_coords();
  SolveReport rep;

  if (p.rank() > 1) {
    const int cap = options.degree_cap >= 0 ? options.degree_cap : default_cap(a, b);
    rep.method = SolveMethod::bounded_degree;
    auto h = mv_bounded_solve(a, b, cap);
    if (h) {
      rep.status = SolveStatus::solved;
      rep.solution = Level3Vector::make(l, p.sources(), std::move(*h));
    } else {
      rep.status = SolveStatus::inconclusive;
      rep.certificate = "no solution with component total degree <= " + std::to_string(cap);
    }
    return rep;
  }

  if (p.rows() == 1) {
    // one target: the Bezout row method decides exactly, independent of strategy
    rep.method = SolveMethod::bezout_single_row;
    std::vector<EvenPoly> row(p.cols(), EvenPoly::zero());
    for (int j = 0; j < p.cols(); ++j) row[j] = a.at(0, j);
    auto v = solve_row_bezout(row, b[0], &rep.certificate);
    if (v) {
      rep.status = SolveStatus::solved;
      rep.certificate.clear();
      rep.solution = Level3Vector::make(l, p.sources(), std::move(*v));
    } else {
      rep.status = SolveStatus::unsolvable;
    }
    return rep;
  }

  std::optional<std::vector<EvenPoly>> h;
  if (options.strategy == Strategy::snf_direct) {
    rep.method = SolveMethod::snf_direct;
    h = solve_snf(a, b, &rep.certificate);
  } else {
    rep.method = SolveMethod::row_induction;
    h = solve_rows_induction(a, b, &rep.certificate);
  }
  if (h) {
    rep.status = SolveStatus::solved;
    rep.certificate.clear();
    rep.solution = Level3Vector::make(l, p.sources(), std::move(*h));
  } else {
    rep.status = SolveStatus::unsolvable;
  }
  return rep;
}

std::vector<Level3Vector> kernel_at_ktype(const Level3Operator& p, const KType& l) {
  const PolyMatrix a = untwist(p, l);
  std::vector<Level3Vector> gens;
  for (auto& k : kernel_basis(a)) gens.push_back(Level3Vector::make(l, p.sources(), std::move(k)));
  return gens;
}

Level3Operator kernel_operator(const Level3Operator& p, const KType& l) {
  const std::vector<Level3Vector> gens = kernel_at_ktype(p, l);
  const int rows = p.cols(), cols = static_cast<int>(gens.size());
  // sources all equal to l: r^l_{l,n} = 1, so untwist(Q,l) has the generators
  // as its columns verbatim
  std::vector<EvenPoly> e(static_cast<size_t>(rows) * cols, EvenPoly::zero(p.rank()));
  for (int k = 0; k < cols; ++k) {
    const std::vector<EvenPoly> h = gens[k].h_coords();
    for (int j = 0; j < rows; ++j) e[static_cast<size_t>(j) * cols + k] = h[j];
  }
  return Level3Operator(std::vector<KType>(cols, l), p.sources(), std::move(e));
}

Exactness check_exactness_at_ktype(const Level3Operator& p, const Level3Operator& q,
                                   const KType& l) {
  if (q.targets() != p.sources())
    throw std::invalid_argument("check_exactness: Q targets must be P sources");
  if (!compose(p, q).is_zero()) return Exactness::not_complex;

  const PolyMatrix qt = untwist(q, l);
  std::vector<std::vector<EvenPoly>> columns;
  columns.reserve(qt.cols());
  for (int k = 0; k < qt.cols(); ++k) {
    std::vector<EvenPoly> col(qt.rows(), EvenPoly::zero());
    for (int j = 0; j < qt.rows(); ++j) col[j] = qt.at(j, k);
    columns.push_back(std::move(col));
  }
  for (const Level3Vector& g : kernel_at_ktype(p, l)) {
    const std::vector<EvenPoly> v = g.h_coords();
    if (!membership(v, columns)) return Exactness::im_strictly_smaller;
  }
  return Exactness::exact;
}

std::optional<std::vector<EvenPoly>> membership(std::span<const EvenPoly> v,
                                                const std::vector<std::vector<EvenPoly>>& generators) {
  const int len = static_cast<int>(v.size());
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != len)
      throw std::invalid_argument("membership: generator length mismatch");
  const int ng = static_cast<int>(generators.size());
  if (ng == 0) {
    for (const auto& e : v)
      if (!e.is_zero()) return std::nullopt;
    return std::vector<EvenPoly>{};
  }
  PolyMatrix g(len, ng);
  for (int j = 0; j < len; ++j)
    for (int k = 0; k < ng; ++k) g.at(j, k) = generators[k][j];
  return solve_linear(g, v);
}

}  // namespace pws
