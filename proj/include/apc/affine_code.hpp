#pragma once

#include "apc/linear_code.hpp"

#include <functional>
#include <optional>
#include <utility>

namespace apc {

// Erasure marker in received words. Field residues stay below 251, so 0xFF
// never collides with data.
inline constexpr std::uint8_t kErased = 0xFF;

enum class ErasureOutcome { Decoded, Ambiguous, Inconsistent };

struct ErasureDecodeResult {
  ErasureOutcome outcome;
  Vec codeword;  // filled only for Decoded
};

// An affine code C + u: a coset of a linear base code. The canonical
// representative (0_k, a) lives in the base's permuted coordinate system;
// every public vector is in original coordinate order.
class AffineCode {
 public:
  AffineCode(LinearCode base, const Vec& u);  // u in original coordinates

  const LinearCode& base() const { return base_; }
  const Vec& tail() const { return tail_; }          // a, length n-k
  const Vec& representative() const { return rep_; } // (0_k, a) in original coords
  bool rep_is_zero() const;

  int length() const { return base_.length(); }
  int dimension() const { return base_.dimension(); }
  const FieldSpec& field() const { return base_.field(); }

  // (x, x*A + a) mapped back through the base permutation.
  Vec encode(const Vec& x) const;

  // w - rep in the base code.
  bool contains(const Vec& w) const;

  // Exact min and max Hamming weight over all coset elements (enumeration).
  std::pair<int, int> weight_profile() const;

  // Decodes a word over {0..p-1, kErased}: subtracts the representative on
  // the non-erased positions and solves for the unique consistent
  // information vector. Ambiguous when the solution space has positive
  // dimension, Inconsistent when no codeword matches.
  ErasureDecodeResult erasure_decode(const Vec& w) const;

  // Unique coset element within the given Hamming radius, by exhaustive
  // search; nullopt when none (or more than one) lies within the radius.
  std::optional<Vec> bounded_distance_decode(const Vec& w, int radius) const;

  void for_each_codeword(const std::function<void(const Vec&)>& fn) const;

 private:
  LinearCode base_;
  Vec tail_;
  Vec rep_;
};

}  // namespace apc
