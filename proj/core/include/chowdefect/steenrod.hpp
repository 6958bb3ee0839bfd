#pragma once

#include "chowdefect/polynomial.hpp"
#include "chowdefect/suite.hpp"

namespace chowdefect {

/// Ring endomorphism t_i -> t_i + t_i^p. Needs unit weights (ContextError).
Polynomial total_power(const Polynomial& f);

/// P^k(f): the degree deg f + k(p-1) component of total_power(f).
/// f must be homogeneous (GradingError).
Polynomial reduced_power(unsigned k, const Polynomial& f);

/// Milnor Q_n as the derivation x -> x^(2^(n+1)) on a mod-2 ring with
/// unit weights (ContextError otherwise).
Polynomial milnor_q(unsigned n, const Polynomial& f);

/// Reduced-power identities among p1, pbar2, pbar5, pbar9, pbar12 on
/// F_3[t1..t4].
SuiteResult steenrod_suite();

/// Q_k(e) = 0 for k <= h-2 and Q_{h-1}(e) = d0 * e, for the Dickson
/// expansion of rank h (1..4).
SuiteResult dickson_suite(unsigned h);

}  // namespace chowdefect
