#pragma once

#include "apc/matrix.hpp"

#include <cstdint>
#include <vector>

namespace apc {

struct RrefResult {
  FieldMatrix reduced;
  int rank = 0;
  std::vector<int> pivots;  // pivot columns, ascending
};

// Reduced row echelon form. Pivot choice is the leftmost nonzero column,
// scanning rows top-down, so the output is deterministic.
RrefResult rref(const FieldMatrix& m);

struct SystematicForm {
  FieldMatrix a;          // k x (n-k)
  std::vector<int> perm;  // perm[pos] = original column placed at pos
};

// For a full-row-rank generator g, returns A with (I_k | A) generating the
// column-permuted row space of g. perm is the identity whenever the first k
// columns of g are already independent; otherwise each dependent leading slot
// is swapped with the leftmost later pivot slot. Throws RankDeficient.
SystematicForm systematic_form(const FieldMatrix& g);

enum class SolveOutcome { Unique, NoSolution, Underdetermined };

struct SolveResult {
  SolveOutcome outcome;
  Vec solution;  // filled only for Unique
};

// Solves coeffs * x = rhs, distinguishing an inconsistent system from one
// whose solution space has positive dimension.
SolveResult solve(const FieldMatrix& coeffs, const Vec& rhs);

// Base-p digits of index, most significant first. index must be < p^len.
Vec index_to_vec(std::uint64_t index, int len, std::uint32_t p);

// p^e, throwing TooLargeToEnumerate when the result would exceed limit.
std::uint64_t enumeration_size(std::uint32_t p, int e, std::uint64_t limit);

}  // namespace apc
