#pragma once

#include <complex>
#include <vector>

#include "laplacext/coeffs.hpp"

namespace laplacext::engine {

using laplacext::Complex;

// One evaluated truncation of the asymptotic expansion
//
//   I(z) ~ e^{-z p(a)} sum_n z^{-(n+lambda)/mu}
//             sum_{m<=n} f_{n,m} Fi(nu/mu, (n+lambda+m nu)/mu; r_0/p_0^{nu/mu}).
//
// terms[k] is the k-th group including its z-power (but not the prefactor);
// partial_sums[k] = prefactor * (terms[0] + ... + terms[k]). The branch of
// z^s is exp(s (log|z| + i theta)) with theta the recorded argument, which
// may live on a non-principal sheet.
struct ExpansionEvaluation {
  Complex z;
  double theta = 0.0;
  Complex prefactor{1.0, 0.0};
  std::vector<Complex> terms;
  std::vector<Complex> partial_sums;
  double heuristic_error = 0.0;  // magnitude of the first omitted term
};

// The coefficient of z^{-(n+lambda)/mu} in the expansion: the inner Faxen sum
// for index n, plus the exponent it multiplies.
struct TermBundle {
  Complex coefficient;
  Complex exponent;  // (n + lambda)/mu
};

TermBundle assemble_term(const coeffs::CoefficientTable& table,
                         const coeffs::ExpansionSpec& spec,
                         const coeffs::BranchContext& branch, int n);

// theta = Arg(z) + 2 pi sheet must lie in the spec's admissible range.
ExpansionEvaluation evaluate(const coeffs::ExpansionSpec& spec, Complex z, int N,
                             int sheet = 0);

// The few-transcendent rearrangement (integer mu >= 2, nu = 1):
//
//   I(z) ~ e^{-z p(a)} sum_{n<mu} z^{-(ceil(n/2)+lambda)/mu}
//             Fi(1/mu, (lambda+n)/mu; x) sum_{m<M} ftilde_{n,m} z^{-m/mu}.
//
// Terms are grouped by the power index m. A nonnegative max_power_index keeps
// only contributions with ceil(n/2) + m <= max_power_index, which matches a
// plain N = max_power_index + 1 term evaluation power-for-power.
ExpansionEvaluation evaluate_corollary2(const coeffs::ExpansionSpec& spec, Complex z,
                                        int M, int sheet = 0, int max_power_index = -1);

}  // namespace laplacext::engine
