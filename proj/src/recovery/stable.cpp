#include <sstream>

#include "uncertainty/bounds.hpp"
#include "uncertainty/errors.hpp"
#include "uncertainty/factorizations.hpp"
#include "uncertainty/recovery.hpp"

namespace uncertainty {

StableRecovery stable_linear_recovery(const UnitaryMatrix& u, const IndexSet& q, const IndexSet& p,
                                      std::span<const cd> y_obs) {
  const std::size_t m = u.dim();
  if (y_obs.size() != m) throw DimensionError("observation length differs from U");
  const double d = delta(u, p, q);
  if (d >= 1.0 - 1e-9) {
    std::ostringstream msg;
    msg << "linear recovery impossible: Delta_{P,Q}(U) = " << d << " is not below 1";
    throw NotRecoverableError(msg.str(), d);
  }
  // I - D_P P_Q(U): zero the rows outside P of the projector, negate, add I.
  ComplexMatrix sys = projector(u, q);
  for (std::size_t i = 0; i < m; ++i) {
    const bool erased = p.contains(i + 1);
    for (std::size_t j = 0; j < m; ++j) sys(i, j) = erased ? -sys(i, j) : cd{};
    sys(i, i) += 1.0;
  }
  const ComplexVector rhs = restrict_to(y_obs, p.complement());
  return {solve_square(sys, rhs), 1.0 / (1.0 - d), d};
}

}  // namespace uncertainty
