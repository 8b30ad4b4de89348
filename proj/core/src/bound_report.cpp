#include "resolvent/bound_report.hpp"

#include "resolvent/blaschke.hpp"
#include "resolvent/errors.hpp"
#include "resolvent/interpolation_bounds.hpp"
#include "resolvent/toeplitz_norm.hpp"

namespace resolvent {

BoundReport make_bound_report(std::size_t n, double r) {
  if (n == 0) throw PreconditionError("bound report: n must be positive");
  if (!(r > 0.0 && r < 1.0)) throw PreconditionError("bound report: r must lie in (0, 1)");
  BoundReport rep{};
  rep.n = n;
  rep.r = r;
  rep.exact = resolvent_sup(n, r);
  rep.asymptotic = asymptotic_value(n, r);
  rep.ratio = rep.exact / rep.asymptotic;
  rep.lower_fejer = lower_bound(n, r);
  rep.upper_sum = upper_bound_sum(Spectrum::repeated(r, n));
  rep.davies_simon = davies_simon(n);
  return rep;
}

}  // namespace resolvent
