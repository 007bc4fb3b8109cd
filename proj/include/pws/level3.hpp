#pragma once

#include <vector>

#include "pws/ktype.hpp"
#include "pws/poly_matrix.hpp"

namespace pws {

// One twisted component: the function phi(lambda) = h(lambda^2) q_{mu,m}(lambda)
struct Level3Element {
  KType source;  // mu
  KType target;  // m
  EvenPoly h;

  Level3Element(KType src, KType tgt, EvenPoly coord)
      : source(std::move(src)), target(std::move(tgt)), h(std::move(coord)) {
    if (source.rank() != target.rank())
      throw std::invalid_argument("Level3Element: group mismatch");
    if (h.nvars() != source.rank())
      throw std::invalid_argument("Level3Element: h variable count != group rank");
    if (!h.is_zero() && !parity_compatible(source, target))
      throw ParityError("Hom_M is zero");
  }
};

// Matrix of twisted polynomials: P_{ij} = a_{ij} q_{n_j, m_i} with sources
// n_j (columns) and targets m_i (rows).  Entries between parity-incompatible
// types must vanish (Hom_M is zero there); such mixed operators are legal.
class Level3Operator {
 public:
  Level3Operator(std::vector<KType> sources, std::vector<KType> targets,
                 std::vector<EvenPoly> entries_row_major);

  static Level3Operator identity(const std::vector<KType>& types);
  static Level3Operator zero(std::vector<KType> sources, std::vector<KType> targets);

  int rows() const { return static_cast<int>(targets_.size()); }
  int cols() const { return static_cast<int>(sources_.size()); }
  int rank() const { return rank_; }

  const std::vector<KType>& sources() const { return sources_; }
  const std::vector<KType>& targets() const { return targets_; }
  const EvenPoly& entry(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols() + j];
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Level3Operator& a, const Level3Operator& b) {
    return a.sources_ == b.sources_ && a.targets_ == b.targets_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<KType> sources_, targets_;
  std::vector<EvenPoly> entries_;
  int rank_;
};

// Column vector of components sharing one source K-type mu
struct Level3Vector {
  KType ktype;  // mu
  std::vector<Level3Element> components;

  static Level3Vector make(const KType& mu, const std::vector<KType>& targets,
                           std::vector<EvenPoly> h);

  std::vector<EvenPoly> h_coords() const {
    std::vector<EvenPoly> h;
    h.reserve(components.size());
    for (const auto& c : components) h.push_back(c.h);
    return h;
  }

  std::vector<KType> targets() const {
    std::vector<KType> t;
    t.reserve(components.size());
    for (const auto& c : components) t.push_back(c.target);
    return t;
  }

  bool is_zero() const {
    for (const auto& c : components)
      if (!c.h.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Level3Vector& a, const Level3Vector& b) {
    if (a.ktype != b.ktype || a.components.size() != b.components.size()) return false;
    for (size_t i = 0; i < a.components.size(); ++i) {
      if (a.components[i].source != b.components[i].source ||
          a.components[i].target != b.components[i].target ||
          a.components[i].h != b.components[i].h)
        return false;
    }
    return true;
  }
};

// plain EvenPoly matrix acting on h-coordinates at K-type l:
// entry (i,j) = a_{ij} r^l_{n_j, m_i}
PolyMatrix untwist(const Level3Operator& p, const KType& l);

Level3Vector apply(const Level3Operator& p, const Level3Vector& u);

// composite twisted operator: apply(compose(p2,p1), u) == apply(p2, apply(p1, u))
Level3Operator compose(const Level3Operator& p2, const Level3Operator& p1);

}  // namespace pws
