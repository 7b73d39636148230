#include "eqhuff/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace eqhuff {

namespace {

struct Masses {
  double p = 0.0;
  double q = 0.0;
};

Masses free_masses(const SourceSpec& spec) {
  const auto report = check_feasibility(spec);
  if (!report.feasible) {
    throw InfeasibleError("impossible: " + report.reason);
  }
  Masses m;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (!spec.is_constrained(i)) m.p += spec.probability(i);
  }
  // Exact complement first, then a single rounding.
  DyadicRational rest = report.kraft_sum;
  rest.numerator = (BigInt(1) << rest.exponent) - rest.numerator;
  m.q = rest.to_double();
  return m;
}

// Scaled ideal probability q0_i = (Q/P) p_i.
double scaled_probability(const Masses& m, double p) { return m.q * (p / m.p); }

}  // namespace

double entropy(const SourceSpec& spec) {
  double h = 0.0;
  for (double p : spec.probabilities()) {
    h -= p * std::log2(p);
  }
  return h;
}

std::vector<double> ideal_lengths(const SourceSpec& spec) {
  const Masses m = free_masses(spec);
  std::vector<double> out(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (const auto& len = spec.symbol(i).length) {
      out[i] = *len;
    } else {
      out[i] = -std::log2(scaled_probability(m, spec.probability(i)));
    }
  }
  return out;
}

std::vector<int> witness_code_lengths(const SourceSpec& spec) {
  const Masses m = free_masses(spec);
  std::vector<int> out(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (const auto& len = spec.symbol(i).length) {
      out[i] = *len;
      continue;
    }
    // q0 = f 2^e with f in [0.5, 1) gives ceil(log2(1/q0)) = 1 - e exactly.
    int e = 0;
    std::frexp(scaled_probability(m, spec.probability(i)), &e);
    out[i] = 1 - e;
  }
  return out;
}

BoundsReport constrained_entropy(const SourceSpec& spec) {
  const Masses m = free_masses(spec);
  BoundsReport r;
  r.entropy = entropy(spec);
  r.big_p = m.p;
  r.big_q = m.q;
  r.ideal_lengths = ideal_lengths(spec);
  r.witness_lengths = witness_code_lengths(spec);

  for (std::size_t i = 0; i < spec.size(); ++i) {
    const double p = spec.probability(i);
    r.constrained_entropy += p * r.ideal_lengths[i];
    r.witness_cost += p * r.witness_lengths[i];
    if (const auto& len = spec.symbol(i).length) {
      r.redundancy_constraint_term += p * (std::log2(p) + *len);
    }
  }
  if (m.p > 0.0) {
    r.redundancy_partition_term = m.p * std::log2(m.p / m.q);
  }

  if (std::abs(r.constrained_entropy - r.decomposed_entropy()) > 1e-9) {
    throw std::logic_error("constrained entropy: direct and decomposed values disagree");
  }
  return r;
}

}  // namespace eqhuff
