#include "uncertainty/bounds.hpp"

namespace uncertainty {

namespace {

nlohmann::json optional_value(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

UncertaintyReport bound_report(const UnitaryMatrix& u, const IndexSet& p, const IndexSet& q) {
  UncertaintyReport r;
  r.m = u.dim();
  r.p_size = p.size();
  r.q_size = q.size();
  r.exact_delta = delta(u, p, q);
  r.exact_sigma = sigma(u, p, q);
  const Interval fro = frobenius_bounds(u, p, q);
  r.frobenius_lower = fro.lower;
  r.frobenius_upper = fro.upper;
  r.coherence_bound_2 = coherence_bound_2(u, p, q);
  r.coherence_bound_1 = coherence_bound_1(u, p, q);

  if (u.is_dft(1e-10)) {
    const Interval d = dft_bounds(r.m, r.p_size, r.q_size);
    r.dft_lower = d.lower;
    r.dft_upper = d.upper;
    if (const auto run = q.as_circular_interval()) {
      const SieveBound s = sieve_bound(r.m, p, run->length);
      r.sieve_bound = s.bound;
      r.sieve_lambda = s.lambda;
    }
  }
  return r;
}

nlohmann::json to_json(const UncertaintyReport& r) {
  return {{"m", r.m},
          {"p_size", r.p_size},
          {"q_size", r.q_size},
          {"exact_delta", r.exact_delta},
          {"exact_sigma", r.exact_sigma},
          {"frobenius_lower", r.frobenius_lower},
          {"frobenius_upper", r.frobenius_upper},
          {"dft_lower", optional_value(r.dft_lower)},
          {"dft_upper", optional_value(r.dft_upper)},
          {"coherence_bound_2", r.coherence_bound_2},
          {"coherence_bound_1", r.coherence_bound_1},
          {"sieve_bound", optional_value(r.sieve_bound)},
          {"sieve_lambda", optional_value(r.sieve_lambda)}};
}

nlohmann::json to_json(const PairBoundReport& r) {
  return {{"f_value", r.f_value},
          {"frame1_bound", optional_value(r.frame1_bound)},
          {"frame2_bound", optional_value(r.frame2_bound)},
          {"frame3_lower", r.frame3_lower},
          {"admissible", r.admissible}};
}

}  // namespace uncertainty
