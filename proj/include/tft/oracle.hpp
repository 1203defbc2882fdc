#pragma once

// Quadratic-time reference computations. Nothing here calls into the
// transform code; the oracles use only uncounted field primitives so they
// can arbitrate the fast paths independently.

#include <cstddef>
#include <span>
#include <vector>

#include "tft/bits.hpp"
#include "tft/field.hpp"
#include "tft/plan.hpp"
#include "tft/polynomial.hpp"

namespace tft::oracle {

using Coeffs = std::vector<Elem>;

namespace detail {

inline Elem add(const FieldCtx& f, Elem a, Elem b) { return (a + b) % f.modulus(); }
inline Elem sub(const FieldCtx& f, Elem a, Elem b) { return (a + f.modulus() - b) % f.modulus(); }

}  // namespace detail

/// f(x) by Horner's rule.
inline Elem naive_eval(const FieldCtx& field, std::span<const Elem> f, Elem x) {
  Elem acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = detail::add(field, field.raw_mul(acc, x), f[i]);
  return acc;
}

/// (f(w^j))_{0 <= j < N} in natural order.
inline Coeffs naive_dft(const FieldCtx& field, std::span<const Elem> f, Elem w, std::size_t n) {
  Coeffs out(n);
  Elem x = 1;
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = naive_eval(field, f, x);
    x = field.raw_mul(x, w);
  }
  return out;
}

/// f mod (z^m - c): coefficient e folds into slot e mod m with weight c^{floor(e/m)}.
inline Coeffs naive_mod_reduce(const FieldCtx& field, std::span<const Elem> f, std::size_t m,
                               Elem c) {
  if (m == 0) throw UsageError("naive_mod_reduce: m must be positive");
  Coeffs out(m, 0);
  Elem weight = 1;
  for (std::size_t e = 0; e < f.size(); ++e) {
    if (e > 0 && e % m == 0) weight = field.raw_mul(weight, c);
    out[e % m] = detail::add(field, out[e % m], field.raw_mul(f[e], weight));
  }
  return out;
}

/// O(deg f * deg g) product; empty when either operand is zero.
inline Coeffs schoolbook_mul(const FieldCtx& field, std::span<const Elem> f,
                             std::span<const Elem> g) {
  const long df = Polynomial(Coeffs(f.begin(), f.end())).degree();
  const long dg = Polynomial(Coeffs(g.begin(), g.end())).degree();
  if (df < 0 || dg < 0) return {};
  Coeffs out(static_cast<std::size_t>(df + dg + 1), 0);
  for (long i = 0; i <= df; ++i) {
    for (long j = 0; j <= dg; ++j) {
      const auto k = static_cast<std::size_t>(i + j);
      out[k] = detail::add(field, out[k], field.raw_mul(f[i], g[j]));
    }
  }
  return out;
}

/// Remainder of f by a monic divisor, by long division.
inline Coeffs poly_rem_monic(const FieldCtx& field, std::span<const Elem> f,
                             std::span<const Elem> divisor) {
  const std::size_t dd = divisor.size() - 1;
  if (divisor.empty() || divisor[dd] != 1) throw UsageError("poly_rem_monic: divisor not monic");
  Coeffs r(f.begin(), f.end());
  for (std::size_t top = r.size(); top-- > dd;) {
    const Elem q = r[top];
    if (q == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) {
      r[top - dd + i] = detail::sub(field, r[top - dd + i], field.raw_mul(q, divisor[i]));
    }
  }
  r.resize(dd, 0);
  return r;
}

/// z^m + 1 as a dense coefficient vector.
inline Coeffs cyclotomic_modulus(std::size_t m) {
  Coeffs phi(m + 1, 0);
  phi[0] = 1;
  phi[m] = 1;
  return phi;
}

struct OracleImage {
  Coeffs gamma;     // product of the first `count` cyclotomic moduli
  Coeffs combined;  // f mod gamma
};

/// Gamma = (z^{n_0}+1)...(z^{n_{count-1}}+1) and C = f mod Gamma.
inline OracleImage combined_image(const FieldCtx& field, std::span<const Elem> f, const Plan& plan,
                                  std::size_t count) {
  if (count == 0 || count > plan.s()) throw UsageError("combined_image: count out of range");
  OracleImage out;
  out.gamma = {1};
  for (std::size_t l = 0; l < count; ++l) {
    out.gamma = schoolbook_mul(field, out.gamma, cyclotomic_modulus(plan.block(l).size));
  }
  out.combined = poly_rem_monic(field, f, out.gamma);
  return out;
}

/// Chinese remaindering of per-block images: returns C_1, ..., C_s where C_i
/// is the unique polynomial of degree < n_0 + ... + n_{i-1} congruent to
/// images[l] mod z^{n_l}+1 for all l < i.
inline std::vector<Coeffs> crt_from_images(const FieldCtx& field, const Plan& plan,
                                           const std::vector<Coeffs>& images) {
  std::vector<Coeffs> out;
  Coeffs c = images.at(0);
  Coeffs gamma = cyclotomic_modulus(plan.block(0).size);
  out.push_back(c);
  for (std::size_t l = 1; l < plan.s(); ++l) {
    const std::size_t m = plan.block(l).size;
    const Coeffs c_mod = naive_mod_reduce(field, c, m, field.modulus() - 1);
    const Coeffs g_mod = naive_mod_reduce(field, gamma, m, field.modulus() - 1);
    for (std::size_t t = 1; t < m; ++t) {
      if (g_mod[t] != 0) throw UsageError("crt_from_images: moduli are not pairwise coprime");
    }
    const Elem g_inv = field.inv(g_mod[0]);
    Coeffs h(m);
    for (std::size_t t = 0; t < m; ++t) {
      h[t] = field.raw_mul(detail::sub(field, images.at(l)[t], c_mod[t]), g_inv);
    }
    Coeffs lift = schoolbook_mul(field, gamma, h);
    c.resize(std::max(c.size(), lift.size()), 0);
    for (std::size_t t = 0; t < lift.size(); ++t) c[t] = detail::add(field, c[t], lift[t]);
    gamma = schoolbook_mul(field, gamma, cyclotomic_modulus(m));
    out.push_back(c);
  }
  return out;
}

/// (f(w^{[i]}))_{i in S}, [i] reversed over log2(N) bits, S ascending.
inline Coeffs pruned_dft(const FieldCtx& field, std::span<const Elem> f,
                         const std::vector<std::size_t>& subset, Elem w, std::size_t n) {
  const int bits = std::countr_zero(n);
  Coeffs out;
  for (std::size_t i : subset) {
    if (i >= n) throw RangeError("pruned_dft: index outside [0, N)");
    out.push_back(naive_eval(field, f, field.raw_pow(w, bit_reverse(i, bits))));
  }
  return out;
}

/// f evaluated at every point of a set.
inline Coeffs eval_all(const FieldCtx& field, std::span<const Elem> f,
                       const std::vector<Elem>& points) {
  Coeffs out;
  out.reserve(points.size());
  for (Elem x : points) out.push_back(naive_eval(field, f, x));
  return out;
}

}  // namespace tft::oracle
