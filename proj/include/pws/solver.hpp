#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pws/level3.hpp"

namespace pws {

enum class Strategy { snf_direct, row_induction };

enum class SolveMethod { bezout_single_row, snf_direct, row_induction, bounded_degree };

// unsolvable is definitive (univariate); inconclusive means "nothing within
// the degree cap" on product groups and proves nothing globally
enum class SolveStatus { solved, unsolvable, inconclusive };

struct SolveReport {
  SolveStatus status = SolveStatus::unsolvable;
  SolveMethod method = SolveMethod::snf_direct;
  std::optional<Level3Vector> solution;
  std::string certificate;  // failed divisibility witness / cap note when no solution
};

struct SolveOptions {
  Strategy strategy = Strategy::snf_direct;
  // product groups only: total-degree cap for the coefficient-space search;
  // -1 picks the default 2*(deg untwisted + deg rhs) + 4
  int degree_cap = -1;
};

const char* to_string(SolveStatus s);
const char* to_string(SolveMethod m);

// Bezout solve of a one-row system: gcd of the untwisted row, divide, lift
SolveReport solve_single_row(const Level3Operator& p, const Level3Element& w, const KType& l);

SolveReport solve_system(const Level3Operator& p, const Level3Vector& w, const KType& l,
                         const SolveOptions& options = {});

// generators of { v : apply(p, v) = 0 } at K-type l (syzygies of untwist(p,l))
std::vector<Level3Vector> kernel_at_ktype(const Level3Operator& p, const KType& l);

// the kernel generators assembled as an operator Q with all sources = l,
// so that untwist(Q, l) has exactly the generators as columns
Level3Operator kernel_operator(const Level3Operator& p, const KType& l);

enum class Exactness { exact, im_strictly_smaller, not_complex };

const char* to_string(Exactness e);

Exactness check_exactness_at_ktype(const Level3Operator& p, const Level3Operator& q,
                                   const KType& l);

// coefficients c_k with sum_k c_k * generators[k] = v over Q[t], or nullopt
std::optional<std::vector<EvenPoly>> membership(std::span<const EvenPoly> v,
                                                const std::vector<std::vector<EvenPoly>>& generators);

}  // namespace pws
