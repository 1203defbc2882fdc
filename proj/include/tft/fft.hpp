#pragma once

// In-place radix-2 FFT, its inverse, and the discrete weighted transform.
//
// Output of fft_in_place is in bit-reversed order: slot k holds f(w^j) with
// k = bit_reverse(j, log2 N). Twiddle factors are generated sequentially
// inside each stage, so no table of roots is ever allocated; the butterflies
// of one stage are visited in the order that makes that possible.

#include <bit>
#include <cstddef>
#include <span>
#include <string>

#include "tft/bits.hpp"
#include "tft/field.hpp"

namespace tft {

namespace detail {

inline int checked_log2(std::size_t n) {
  if (n == 0 || !std::has_single_bit(n)) {
    throw ShapeError("transform length " + std::to_string(n) + " is not a power of two");
  }
  return std::countr_zero(n);
}

inline void check_root(const FieldCtx& field, Elem w, std::size_t n) {
  if (!field.is_principal_root(w, n)) {
    throw RootOrderError("element " + std::to_string(w) + " is not a principal " +
                         std::to_string(n) + "-th root of unity");
  }
}

}  // namespace detail

/// Overwrites a (length N = 2^p) with DFT_w(a) in bit-reversed order.
inline void fft_in_place(const FieldCtx& field, std::span<Elem> a, Elem w) {
  const std::size_t n = a.size();
  const int p = detail::checked_log2(n);
  detail::check_root(field, w, n);
  for (int i = 1; i <= p; ++i) {
    const std::size_t u = n >> i;
    const std::size_t groups = std::size_t{1} << (i - 1);
    const Elem wu = field.pow(w, u);
    Elem twiddle = 1;
    // Group j splits f mod (z^{2u} - w^{2uj}) and sits at bit_reverse(j, i-1) * 2u.
    for (std::size_t j = 0; j < groups; ++j) {
      const std::size_t t = bit_reverse(j, i) * u;
      for (std::size_t k = 0; k < u; ++k) {
        const Elem x = a[t + k];
        const Elem y = field.mul(twiddle, a[t + k + u]);
        a[t + k] = field.add(x, y);
        a[t + k + u] = field.sub(x, y);
      }
      if (j + 1 < groups) twiddle = field.mul(twiddle, wu);
    }
  }
}

/// Inverse of fft_in_place: consumes bit-reversed evaluations, produces
/// natural-order coefficients. The halvings of each inverse butterfly are
/// deferred to one final pass multiplying by 1/N.
inline void ifft_in_place(const FieldCtx& field, std::span<Elem> a, Elem w) {
  const std::size_t n = a.size();
  const int p = detail::checked_log2(n);
  detail::check_root(field, w, n);
  if (n == 1) return;
  const Elem w_inv = field.pow(w, n - 1);
  for (int i = p; i >= 1; --i) {
    const std::size_t u = n >> i;
    const std::size_t groups = std::size_t{1} << (i - 1);
    const Elem wu = field.pow(w_inv, u);
    Elem twiddle = 1;
    for (std::size_t j = 0; j < groups; ++j) {
      const std::size_t t = bit_reverse(j, i) * u;
      for (std::size_t k = 0; k < u; ++k) {
        const Elem x = a[t + k];
        const Elem y = a[t + k + u];
        a[t + k] = field.add(x, y);
        a[t + k + u] = field.mul(field.sub(x, y), twiddle);
      }
      if (j + 1 < groups) twiddle = field.mul(twiddle, wu);
    }
  }
  const Elem inv_n = field.inv(static_cast<Elem>(n % field.modulus()));
  for (auto& x : a) x = field.scale_pow2(x, inv_n);
}

/// Parameters of a discrete weighted transform: evaluates at v * w^j.
struct DwtSpec {
  std::size_t length = 1;
  Elem root = 1;
  Elem weight = 1;
};

/// a_i <- v^i a_i followed by fft_in_place: slot k = f(v w^j), k = [j].
/// A weight of 1 skips the (identity) weighting pass.
inline void dwt(const FieldCtx& field, std::span<Elem> a, const DwtSpec& spec) {
  if (a.size() != spec.length) {
    throw ShapeError("dwt: buffer length " + std::to_string(a.size()) + " != " +
                     std::to_string(spec.length));
  }
  if (spec.weight != 1 && a.size() > 1) {
    Elem vi = spec.weight;
    for (std::size_t i = 1; i < a.size(); ++i) {
      a[i] = field.mul(a[i], vi);
      if (i + 1 < a.size()) vi = field.mul(vi, spec.weight);
    }
  }
  fft_in_place(field, a, spec.root);
}

/// Inverse of dwt.
inline void idwt(const FieldCtx& field, std::span<Elem> a, const DwtSpec& spec) {
  if (spec.weight % field.modulus() == 0) throw DomainError("idwt: zero weight");
  if (a.size() != spec.length) {
    throw ShapeError("idwt: buffer length " + std::to_string(a.size()) + " != " +
                     std::to_string(spec.length));
  }
  ifft_in_place(field, a, spec.root);
  if (spec.weight != 1 && a.size() > 1) {
    const Elem v_inv = field.inv(spec.weight);
    Elem vi = v_inv;
    for (std::size_t i = 1; i < a.size(); ++i) {
      a[i] = field.mul(a[i], vi);
      if (i + 1 < a.size()) vi = field.mul(vi, v_inv);
    }
  }
}

}  // namespace tft
