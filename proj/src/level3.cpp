#include "pws/level3.hpp"

namespace pws {

Level3Operator::Level3Operator(std::vector<KType> sources, std::vector<KType> targets,
                               std::vector<EvenPoly> entries_row_major)
    : sources_(std::move(sources)), targets_(std::move(targets)),
      entries_(std::move(entries_row_major)) {
  if (targets_.empty()) throw std::invalid_argument("Level3Operator: needs at least one target");
  rank_ = targets_[0].rank();
  for (const auto& k : sources_)
    if (k.rank() != rank_) throw std::invalid_argument("Level3Operator: group mismatch");
  for (const auto& k : targets_)
    if (k.rank() != rank_) throw std::invalid_argument("Level3Operator: group mismatch");
  if (entries_.size() != static_cast<size_t>(rows()) * cols())
    throw std::invalid_argument("Level3Operator: entry count != rows*cols");
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      const EvenPoly& a = entry(i, j);
      if (a.nvars() != rank_)
        throw std::invalid_argument("Level3Operator: entry variable count != group rank");
      if (!a.is_zero() && !parity_compatible(sources_[j], targets_[i]))
        throw ParityError("Level3Operator: nonzero entry where Hom_M is zero");
    }
}

Level3Operator Level3Operator::identity(const std::vector<KType>& types) {
  const int n = static_cast<int>(types.size());
  if (n == 0) throw std::invalid_argument("Level3Operator: empty identity");
  std::vector<EvenPoly> e(static_cast<size_t>(n) * n, EvenPoly::zero(types[0].rank()));
  for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = EvenPoly::one(types[0].rank());
  return Level3Operator(types, types, std::move(e));
}

Level3Operator Level3Operator::zero(std::vector<KType> sources, std::vector<KType> targets) {
  if (targets.empty()) throw std::invalid_argument("Level3Operator: needs at least one target");
  const int rank = targets[0].rank();
  std::vector<EvenPoly> e(sources.size() * targets.size(), EvenPoly::zero(rank));
  return Level3Operator(std::move(sources), std::move(targets), std::move(e));
}

Level3Vector Level3Vector::make(const KType& mu, const std::vector<KType>& targets,
                                std::vector<EvenPoly> h) {
  if (targets.size() != h.size())
    throw std::invalid_argument("Level3Vector: targets/h size mismatch");
  Level3Vector v{mu, {}};
  v.components.reserve(h.size());
  for (size_t i = 0; i < h.size(); ++i)
    v.components.emplace_back(mu, targets[i], std::move(h[i]));
  return v;
}

PolyMatrix untwist(const Level3Operator& p, const KType& l) {
  if (l.rank() != p.rank()) throw std::invalid_argument("untwist: group mismatch");
  for (const auto& n : p.sources())
    if (!parity_compatible(l, n)) throw ParityError("untwist: l incompatible with a source");
  for (const auto& m : p.targets())
    if (!parity_compatible(l, m)) throw ParityError("untwist: l incompatible with a target");
  PolyMatrix a(p.rows(), p.cols(), p.rank());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) {
      if (p.entry(i, j).is_zero()) continue;
      a.at(i, j) = p.entry(i, j) * r_poly(l, p.sources()[j], p.targets()[i]);
    }
  return a;
}

Level3Vector apply(const Level3Operator& p, const Level3Vector& u) {
  if (u.targets() != p.sources())
    throw std::invalid_argument("apply: component targets must match operator sources");
  for (const auto& c : u.components)
    if (c.source != u.ktype) throw std::invalid_argument("apply: mixed sources in vector");
  const PolyMatrix a = untwist(p, u.ktype);
  return Level3Vector::make(u.ktype, p.targets(), mat_vec(a, u.h_coords()));
}

Level3Operator compose(const Level3Operator& p2, const Level3Operator& p1) {
  if (p1.targets() != p2.sources()) throw std::invalid_argument("compose: shape mismatch");
  const int rows = p2.rows(), mid = p2.cols(), cols = p1.cols();
  std::vector<EvenPoly> e(static_cast<size_t>(rows) * cols, EvenPoly::zero(p2.rank()));
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      EvenPoly& acc = e[static_cast<size_t>(i) * cols + k];
      for (int j = 0; j < mid; ++j) {
        if (p2.entry(i, j).is_zero() || p1.entry(j, k).is_zero()) continue;
        acc += p2.entry(i, j) * p1.entry(j, k) *
               r_poly(p1.sources()[k], p2.sources()[j], p2.targets()[i]);
      }
    }
  return Level3Operator(p1.sources(), p2.targets(), std::move(e));
}

}  // namespace pws
