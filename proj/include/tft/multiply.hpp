#pragma once

#include <bit>
#include <cstddef>
#include <span>

#include "tft/bridge.hpp"
#include "tft/cyclotomic.hpp"
#include "tft/fft.hpp"
#include "tft/plan.hpp"
#include "tft/polynomial.hpp"

namespace tft {

enum class TftPath { kCyclotomic, kBitReversed };

inline const char* path_name(TftPath p) {
  return p == TftPath::kCyclotomic ? "cyclotomic" : "bitreversed";
}

/// a <- a * b slotwise. Both operands must be transforms under equal plans.
inline void pointwise_multiply(std::span<Elem> a, std::span<const Elem> b, const Plan& plan_a,
                               const Plan& plan_b) {
  if (!(plan_a == plan_b)) throw UsageError("pointwise product of transforms with different plans");
  if (a.size() != plan_a.n() || b.size() != plan_a.n()) {
    throw ShapeError("pointwise product: operand length differs from plan length");
  }
  const FieldCtx& field = plan_a.field();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = field.mul(a[i], b[i]);
}

/// fg via zero-padded length-N FFTs, N the least power of two > deg(fg).
inline Polynomial multiply_full_fft(const Polynomial& f, const Polynomial& g,
                                    const FieldCtx& field) {
  const long df = f.degree(), dg = g.degree();
  if (df < 0 || dg < 0) return {};
  const std::size_t len = static_cast<std::size_t>(df + dg + 1);
  const std::size_t big_n = std::bit_ceil(len);
  const Elem w = field.root_of_unity(big_n);
  Polynomial a = f, b = g;
  a.resize(big_n);
  b.resize(big_n);
  fft_in_place(field, a.span(), w);
  fft_in_place(field, b.span(), w);
  for (std::size_t i = 0; i < big_n; ++i) a[i] = field.mul(a[i], b[i]);
  ifft_in_place(field, a.span(), w);
  a.resize(len);
  return a;
}

/// fg via length-n truncated transforms, n = deg(fg) + 1.
inline Polynomial multiply_tft(const Polynomial& f, const Polynomial& g, const FieldCtx& field,
                               TftPath path = TftPath::kCyclotomic, Engine engine = Engine::kNew) {
  const long df = f.degree(), dg = g.degree();
  if (df < 0 || dg < 0) return {};
  const std::size_t len = static_cast<std::size_t>(df + dg + 1);
  const Plan plan(len, field);
  Polynomial a = f, b = g;
  a.resize(len);
  b.resize(len);
  if (path == TftPath::kCyclotomic) {
    ctft_forward(a, plan, engine);
    ctft_forward(b, plan, engine);
    pointwise_multiply(a.span(), b.span(), plan, plan);
    ctft_inverse(a, plan);
  } else {
    brtft_forward(a, plan, engine);
    brtft_forward(b, plan, engine);
    pointwise_multiply(a.span(), b.span(), plan, plan);
    brtft_inverse(a, plan);
  }
  return a;
}

}  // namespace tft
