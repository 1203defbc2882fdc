#pragma once

// Bit-reversed TFT through the cyclotomic break.
//
// Entry l of the result is f(omega^{[l]}), the first n entries of the
// bit-reversed length-N DFT. Block i of the output consists of the roots of
// Psi_i = z^{n_i} - Omega(i)^{n_i}, and Psi_i(Omega(s) z) is a nonzero
// constant multiple of z^{n_i} + 1. So
//   1. f(z)  <- f(Omega(s) z)
//   2. break into images mod z^{n_i} + 1            (= f mod Psi_i, shifted)
//   3. image i <- image i (Omega(s)^{-1} z)          (= f mod Psi_i)
//   4. DWT of block i with weight Omega(i) and root omega^{N/n_i}.
// Steps 3 and 4 both scale coefficient t by a t-th power, so they are fused
// into a single weighting pass with weight Omega(i) / Omega(s).

#include <cstddef>
#include <span>

#include "tft/cyclotomic.hpp"
#include "tft/fft.hpp"
#include "tft/plan.hpp"

namespace tft {

struct BitReversedTFT {
  std::vector<Elem> values;  // values[l] = f(omega^{[l]})
};

namespace detail {

inline void scale_by_powers(const FieldCtx& field, std::span<Elem> a, Elem w) {
  if (a.size() < 2) return;
  Elem wk = w;
  for (std::size_t k = 1; k < a.size(); ++k) {
    a[k] = field.mul(a[k], wk);
    if (k + 1 < a.size()) wk = field.mul(wk, w);
  }
}

inline DwtSpec bridge_dwt(const Plan& plan, std::size_t i) {
  const Elem weight = plan.s() == 1
                          ? Elem{1}
                          : plan.field().raw_mul(plan.cumulative_root(i), plan.shift_inv());
  return {plan.block(i).size, plan.block_dft_root(i), weight};
}

}  // namespace detail

/// In-place bit-reversed TFT of the n coefficients in a (engine kMateer
/// needs N slots, like ctft_forward).
inline void brtft_forward(std::span<Elem> a, const Plan& plan, Engine engine = Engine::kNew) {
  const FieldCtx& field = plan.field();
  // With a single block the shift and its inverse cancel around an identity break.
  const bool shifted = plan.s() > 1;
  if (shifted) detail::scale_by_powers(field, a.first(plan.n()), plan.shift());
  switch (engine) {
    case Engine::kNew:
      break_in_place(a, plan);
      break;
    case Engine::kSergeev:
      sergeev_break(a, plan);
      break;
    case Engine::kMateer:
      mateer_break(a, plan);
      mateer_compact(a, plan);
      break;
  }
  for (std::size_t i = 0; i < plan.s(); ++i) {
    const Block& b = plan.block(i);
    dwt(field, a.subspan(b.offset, b.size), detail::bridge_dwt(plan, i));
  }
}

/// Inverse of brtft_forward on n slots.
inline void brtft_inverse(std::span<Elem> a, const Plan& plan) {
  detail::require_length(a, plan.n(), "brtft_inverse");
  const FieldCtx& field = plan.field();
  for (std::size_t i = 0; i < plan.s(); ++i) {
    const Block& b = plan.block(i);
    idwt(field, a.subspan(b.offset, b.size), detail::bridge_dwt(plan, i));
  }
  if (plan.s() > 1) {
    unbreak_in_place(a, plan);
    detail::scale_by_powers(field, a, plan.shift_inv());
  }
}

inline void brtft_forward(Polynomial& a, const Plan& plan, Engine engine = Engine::kNew) {
  detail::require_length(a.span(), plan.n(), "brtft_forward");
  if (engine == Engine::kMateer) {
    a.reserve(plan.big_n());
    a.resize(plan.big_n());
    brtft_forward(a.span(), plan, engine);
    a.resize(plan.n());
    return;
  }
  brtft_forward(a.span(), plan, engine);
}

inline void brtft_inverse(Polynomial& a, const Plan& plan) { brtft_inverse(a.span(), plan); }

/// Value-returning convenience wrapper.
inline BitReversedTFT brtft(const Polynomial& f, const Plan& plan, Engine engine = Engine::kNew) {
  Polynomial work = f;
  work.resize(plan.n());
  brtft_forward(work, plan, engine);
  return {std::move(work.coeffs())};
}

}  // namespace tft
