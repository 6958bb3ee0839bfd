#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chowdefect/polynomial.hpp"

namespace chowdefect {

struct NamedClass {
  std::string name;
  Polynomial value;
  unsigned chow_degree;
};

/// e_k(t_1..t_n); zero for k > n.
Polynomial elem_symmetric(const RingPtr& ring, unsigned k);
/// e_k(t_1^2..t_n^2); zero for k > n.
Polynomial pontryagin(const RingPtr& ring, unsigned k);
/// c_1^j.
Polynomial c1_power(const RingPtr& ring, unsigned j);

/// p1, pbar2, pbar5, pbar9, pbar12, r15 on F_3[t1..t4] with unit weights.
/// pbar9 and pbar12 are the fixed representatives p3^3 and p4^3.
std::vector<NamedClass> toda_generators(const RingPtr& ring);

/// F_2[z, x1..xh], all weights 1.
RingPtr make_q_context(unsigned h);

struct DicksonExpansion {
  RingPtr ring;
  /// prod over lambda in F_2^h of (z + sum lambda_i x_i).
  Polynomial e;
  /// d[i] = coefficient of z^(2^i), i = 0..h-1, as polynomials in x.
  std::vector<Polynomial> d;
  /// Coefficient of z^(2^h) is 1 and no other power of z occurs.
  bool dickson_form = false;
};

/// h in 1..4; otherwise SizeError.
DicksonExpansion dickson_expand(unsigned h);

/// Named classes understood by the polynomial parser:
///   c<k>  elementary symmetric      p<k>  Pontryagin
///   e<j>  c1^j                      pbar2, pbar5, pbar9, pbar12, r15
std::optional<Polynomial> resolve_alias(std::string_view name, const RingPtr& ring);

/// parse_polynomial with resolve_alias as the alias resolver.
Polynomial parse_class_expression(std::string_view text, const RingPtr& ring);

}  // namespace chowdefect
