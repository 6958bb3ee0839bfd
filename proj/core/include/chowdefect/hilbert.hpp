#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chowdefect/groebner.hpp"

namespace chowdefect {

/// Largest degree slice (in monomials) any Hilbert computation will build.
inline constexpr std::size_t kMaxSliceMonomials = 2'000'000;

/// dim (S/I)_d by counting degree-d monomials outside the leading-term ideal.
std::size_t hf_staircase(const IdealHandle& ideal, unsigned d);

/// dim S_d minus the rank of the Macaulay matrix whose rows are m*g for
/// every generator g and monomial m of degree d - deg g.
std::size_t hf_linalg(const IdealHandle& ideal, unsigned d);

/// Same as hf_linalg with dense Gaussian elimination. Small inputs only.
std::size_t hf_linalg_dense(const IdealHandle& ideal, unsigned d);

/// HF(S/I, d) for d = 0..N from one truncated Groebner basis.
std::vector<std::size_t> hilbert_function_staircase(const IdealHandle& ideal, unsigned N);

/// HF(S/I, d) for d = 0..N by linear algebra, built degree by degree:
/// I_d is spanned by x_i * I_{d - w_i} and the generators of degree d, and
/// each slice is kept in reduced echelon form.
std::vector<std::size_t> hilbert_function_linalg(const IdealHandle& ideal, unsigned N);

enum class HfMethod { kGroebner, kLinalg, kBoth };

std::string to_string(HfMethod m);
/// "groebner", "linalg" or "both"; throws std::invalid_argument otherwise.
HfMethod parse_hf_method(std::string_view text);

/// With kBoth, both methods run and any disagreement throws MethodDisagreement.
std::vector<std::size_t> hilbert_function(const IdealHandle& ideal, unsigned N, HfMethod method);

struct DSeries {
  unsigned max_degree = 0;
  std::vector<std::size_t> hf_ker;  // HF(S/Ker, d), d = 0..N
  std::vector<std::size_t> hf_im;   // HF(S/Im, d), d = 0..N
  std::vector<std::int64_t> D;      // hf_im - hf_ker, d = 0..N
};

/// D_d = HF(S/Im, d) - HF(S/Ker, d). Checks Im inside Ker first and throws
/// ContainmentError naming the first generator of Im outside Ker.
DSeries d_series(const IdealHandle& ker, const IdealHandle& im, unsigned N, HfMethod method);

}  // namespace chowdefect
