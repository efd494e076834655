#pragma once

#include <string>

#include "schwarzkit/core_linalg.hpp"

namespace schwarzkit {

// One verified instance of "lhs >= rhs". gap is always the literal difference
// of the two reported doubles; satisfied/equality are tolerance verdicts.
struct BoundReport {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  bool satisfied = false;
  bool equality = false;

  std::string to_json() const;
};

// gap = lhs - rhs; satisfied iff gap >= -slack(lhs, rhs) (equality implies
// satisfied by construction); equality iff |gap| <= equality_slack(lhs).
BoundReport make_report(std::string label, double lhs, double rhs,
                        const Tolerance& tol = Tolerance::standard());

}  // namespace schwarzkit
