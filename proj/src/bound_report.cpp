#include "schwarzkit/bound_report.hpp"

#include <cmath>
#include <utility>

#include "schwarzkit/jsonfmt.hpp"

namespace schwarzkit {

BoundReport make_report(std::string label, double lhs, double rhs, const Tolerance& tol) {
  BoundReport r;
  r.label = std::move(label);
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = lhs - rhs;
  r.equality = std::abs(r.gap) <= tol.equality_slack(lhs);
  r.satisfied = r.gap >= -tol.slack(lhs, rhs) || r.equality;
  return r;
}

std::string BoundReport::to_json() const {
  jsonfmt::Writer w;
  w.begin_object()
      .key("label").value(label)
      .key("lhs").value(lhs)
      .key("rhs").value(rhs)
      .key("gap").value(gap)
      .key("satisfied").value(satisfied)
      .key("equality").value(equality)
      .end_object();
  return w.str();
}

}  // namespace schwarzkit
