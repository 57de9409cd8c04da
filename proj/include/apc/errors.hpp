#pragma once

#include <stdexcept>

namespace apc {

// Generator matrix passed where full row rank is required.
struct RankDeficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exhaustive operation was asked to enumerate past its guard.
struct TooLargeToEnumerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction arguments violate a required subcode relation.
struct NotNested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// hyperplane_between needs strictly growing dimensions.
struct EqualDimensions : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction I requires the all-one vector in both base codes.
struct NotSelfComplementary : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction IA requires the all-one vector in the inner codes.
struct MissingAllOne : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The two coset representatives fail the product compatibility condition.
struct IncompatibleRepresentatives : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace apc
