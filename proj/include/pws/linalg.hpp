#pragma once

#include <optional>
#include <vector>

#include "pws/rational.hpp"

namespace pws {

// dense exact linear algebra over the rationals; small systems only
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

// reduced row echelon form in place; returns the pivot column of each pivot row
std::vector<int> rref(RatMatrix& a);

// some solution of A x = b, or nullopt when the system is inconsistent
std::optional<RatVector> lin_solve(RatMatrix a, RatVector b);

// basis of { x : A x = 0 }
std::vector<RatVector> nullspace(RatMatrix a);

}  // namespace pws
