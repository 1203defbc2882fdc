#pragma once

// Cyclotomic truncated Fourier transform.
//
// For a length-n input f (deg f < n) the transform evaluates f at the roots
// of z^{n_i} + 1 for every block i of the plan. Three engines break f into
// its images f_i = f mod (z^{n_i} + 1):
//
//   new      three in-place passes: remainders, weighted images, reweighting.
//            Only additions and multiplications by 2^{+-1}.
//   sergeev  in place; walks K = N, N/2, ... keeping the leading coefficients
//            of f mod (z^K - 1) and rebuilding the rest from finished images.
//   mateer   butterfly splitting of f mod (z^N - 1); needs N slots.
//
// After the break every image is evaluated with a negacyclic DWT.
//
// Image weights: with C_i = f mod (z^{n_0}+1)...(z^{n_{i-1}}+1), a term z^e
// of image j reaches C_i mod (z^{n_k}+1), k >= i, iff e has every bit n_l,
// j < l < i, set; it arrives as 2^{i-1-j} (-1)^{e[log n_k]} z^{e mod n_k}.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>

#include "tft/fft.hpp"
#include "tft/plan.hpp"
#include "tft/polynomial.hpp"

namespace tft {

enum class Engine { kNew, kSergeev, kMateer };

inline const char* engine_name(Engine e) {
  switch (e) {
    case Engine::kNew:
      return "new";
    case Engine::kSergeev:
      return "sergeev";
    case Engine::kMateer:
      return "mateer";
  }
  return "?";
}

/// Interpretation of an n-slot buffer between the stages of a transform.
enum class LayoutState { kCoefficients, kRemainders, kWeightedImages, kImages, kEvaluations };

struct ImageLayout {
  std::span<Elem> slots;
  LayoutState state = LayoutState::kCoefficients;
};

/// Per-phase operation counts of break_in_place.
struct BreakProfile {
  OpCount remainders;
  OpCount contributions;
  OpCount scaling;  // the x2 / x1/2 sweeps around each contribution pass
  OpCount reweigh;

  [[nodiscard]] OpCount total() const { return remainders + contributions + scaling + reweigh; }
};

namespace detail {

inline void require_length(std::span<const Elem> a, std::size_t len, const char* who) {
  if (a.size() != len) {
    throw ShapeError(std::string(who) + ": buffer has " + std::to_string(a.size()) +
                     " slots, plan needs " + std::to_string(len));
  }
}

inline void require_state(const ImageLayout& a, LayoutState s, const char* who) {
  if (a.state != s) throw UsageError(std::string(who) + ": buffer is in the wrong layout state");
}

// Adds (or, with Negate, subtracts) the weight-normalized contributions of
// images 0..k-1 into block k.
template <bool Negate>
void apply_contribution(std::span<Elem> a, const Plan& plan, std::size_t k) {
  const FieldCtx& field = plan.field();
  const Block& tgt_blk = plan.block(k);
  auto tgt = a.subspan(tgt_blk.offset, tgt_blk.size);
  for (std::size_t j = 0; j < k; ++j) {
    const Block& src_blk = plan.block(j);
    auto src = a.subspan(src_blk.offset, src_blk.size);
    const std::uint64_t mask = criterion_mask(plan, j, k);
    // Exponents sharing the bits above n_{k-1} share the criterion, so the
    // survivors come in aligned runs.
    const std::size_t run = j + 1 < k ? plan.block(k - 1).size : src_blk.size;
    for (std::uint64_t e = mask; e < src_blk.size; e = next_covering(e + run - 1, mask)) {
      for (std::uint64_t c = e; c < e + run; c += tgt_blk.size) {
        const bool minus = (bit(c, tgt_blk.exp) != 0) != Negate;
        for (std::size_t t = 0; t < tgt_blk.size; ++t) {
          tgt[t] = minus ? field.sub(tgt[t], src[c + t]) : field.add(tgt[t], src[c + t]);
        }
      }
    }
  }
}

inline void double_block(std::span<Elem> a, const Plan& plan, std::size_t k) {
  const Block& b = plan.block(k);
  for (std::size_t t = 0; t < b.size; ++t) a[b.offset + t] = plan.field().dbl(a[b.offset + t]);
}

inline void halve_block(std::span<Elem> a, const Plan& plan, std::size_t k) {
  const Block& b = plan.block(k);
  for (std::size_t t = 0; t < b.size; ++t) a[b.offset + t] = plan.field().half(a[b.offset + t]);
}

inline DwtSpec block_dwt(const Plan& plan, std::size_t i) {
  return {plan.block(i).size, plan.block_dft_root(i), plan.block_root(i)};
}

}  // namespace detail

/// Phase 1: block i <- r_i = q_{i-1} mod (z^{n_i}+1), where q_{-1} = f and
/// q_i = q_{i-1} quo (z^{n_i}+1) lives in the slots after block i.
inline void reduce_to_remainders(std::span<Elem> a, const Plan& plan) {
  detail::require_length(a, plan.n(), "reduce_to_remainders");
  const FieldCtx& field = plan.field();
  for (const Block& b : plan.blocks()) {
    for (std::size_t t = 0; t < b.tail; ++t) {
      a[b.offset + t] = field.sub(a[b.offset + t], a[b.offset + b.size + t]);
    }
  }
}

/// Inverse of reduce_to_remainders.
inline void restore_from_remainders(std::span<Elem> a, const Plan& plan) {
  detail::require_length(a, plan.n(), "restore_from_remainders");
  const FieldCtx& field = plan.field();
  for (std::size_t i = plan.s(); i-- > 0;) {
    const Block& b = plan.block(i);
    for (std::size_t t = 0; t < b.tail; ++t) {
      a[b.offset + t] = field.add(a[b.offset + t], a[b.offset + b.size + t]);
    }
  }
}

/// Blocks 0..k-1 hold the weighted images f_j* = 2^{-j} f_j and block k holds
/// 2 r_k; afterwards block k holds 2 f_k*. Additions and subtractions only.
inline void add_contribution(std::span<Elem> a, const Plan& plan, std::size_t k) {
  detail::require_length(a, plan.n(), "add_contribution");
  detail::apply_contribution<false>(a, plan, k);
}

/// Inverse of add_contribution.
inline void subtract_contribution(std::span<Elem> a, const Plan& plan, std::size_t k) {
  detail::require_length(a, plan.n(), "subtract_contribution");
  detail::apply_contribution<true>(a, plan, k);
}

/// Writes the images f mod (z^{n_i}+1) in place of the coefficients of f.
/// At most 3n additions and 2n multiplications by 2^{+-1}; no general
/// multiplications and O(1) scratch.
inline void break_in_place(std::span<Elem> a, const Plan& plan, BreakProfile* profile = nullptr) {
  detail::require_length(a, plan.n(), "break_in_place");
  const FieldCtx& field = plan.field();
  CountedSession session(field);
  BreakProfile local;

  reduce_to_remainders(a, plan);
  local.remainders = session.delta();

  for (std::size_t k = 1; k < plan.s(); ++k) {
    session.restart();
    detail::double_block(a, plan, k);
    local.scaling += session.delta();
    session.restart();
    add_contribution(a, plan, k);
    local.contributions += session.delta();
    session.restart();
    detail::halve_block(a, plan, k);
    local.scaling += session.delta();
  }

  session.restart();
  for (std::size_t k = 1; k < plan.s(); ++k) {
    const Block& b = plan.block(k);
    const Elem w = plan.image_weight(k);
    for (std::size_t t = 0; t < b.size; ++t) a[b.offset + t] = field.scale_pow2(a[b.offset + t], w);
  }
  local.reweigh = session.delta();
  if (profile) *profile = local;
}

/// Inverse of break_in_place: recovers f (deg f < n) from its images.
inline void unbreak_in_place(std::span<Elem> a, const Plan& plan) {
  detail::require_length(a, plan.n(), "unbreak_in_place");
  const FieldCtx& field = plan.field();
  for (std::size_t k = 1; k < plan.s(); ++k) {
    const Block& b = plan.block(k);
    const Elem w = plan.image_weight_inv(k);
    for (std::size_t t = 0; t < b.size; ++t) a[b.offset + t] = field.scale_pow2(a[b.offset + t], w);
  }
  for (std::size_t k = plan.s(); k-- > 1;) {
    detail::double_block(a, plan, k);
    subtract_contribution(a, plan, k);
    detail::halve_block(a, plan, k);
  }
  restore_from_remainders(a, plan);
}

namespace detail {

// Coefficient idx (< K) of C_i mod (z^K - 1), C_i the combination of the
// first `images` finished images, K a power of two not above the last of
// their sizes. Horner-style doubling applies the weights 2^{images-1-j}.
inline Elem combined_coefficient(std::span<const Elem> a, const Plan& plan, std::size_t images,
                                 std::size_t idx, std::size_t k_mod) {
  const FieldCtx& field = plan.field();
  const int shift = std::countr_zero(k_mod);
  Elem sum = 0;
  for (std::size_t j = 0; j < images; ++j) {
    if (j > 0) sum = field.dbl(sum);
    const Block& b = plan.block(j);
    std::uint64_t mask = 0;
    for (std::size_t l = j + 1; l < images; ++l) mask |= plan.block(l).size;
    const std::uint64_t hi_mask = mask >> shift;
    for (std::uint64_t hi = hi_mask; (hi << shift) < b.size; hi = next_covering(hi, hi_mask)) {
      sum = field.add(sum, a[b.offset + ((hi << shift) | idx)]);
    }
  }
  return sum;
}

}  // namespace detail

/// Sergeev's in-place break. Same final state as break_in_place.
inline void sergeev_break(std::span<Elem> a, const Plan& plan) {
  detail::require_length(a, plan.n(), "sergeev_break");
  const FieldCtx& field = plan.field();
  const std::size_t n = plan.n();
  const std::size_t last = plan.block(plan.s() - 1).size;
  std::size_t images = 0;
  // Invariant: blocks < images are final; slots [start, n) hold the leading
  // coefficients of f mod (z^K - 1).
  for (std::size_t k_mod = plan.big_n(); k_mod > last; k_mod /= 2) {
    const std::size_t half = k_mod / 2;
    const std::size_t start = plan.block(images).offset;
    const std::size_t len = n - start;
    if (half == plan.block(images).size) {
      const std::size_t kept = plan.block(images).tail;
      for (std::size_t t = 0; t < half; ++t) {
        if (t < kept) {
          const Elem x = a[start + t], y = a[start + t + half];
          a[start + t] = field.sub(x, y);
          a[start + t + half] = field.add(x, y);
        } else if (images > 0) {
          const Elem hi = detail::combined_coefficient(a, plan, images, t + half, k_mod);
          a[start + t] = field.sub(a[start + t], hi);
        }
      }
      ++images;
    } else {
      for (std::size_t t = 0; t < len; ++t) {
        const Elem hi = detail::combined_coefficient(a, plan, images, t + half, k_mod);
        a[start + t] = field.add(a[start + t], hi);
      }
    }
  }
}

/// Mateer's break on an N-slot buffer holding f zero-padded. Leaves image i
/// in slots [n_i, 2 n_i) (or the whole buffer when n = N). Additions only.
inline void mateer_break(std::span<Elem> a, const Plan& plan) {
  detail::require_length(a, plan.big_n(), "mateer_break");
  const FieldCtx& field = plan.field();
  const std::size_t last = plan.block(plan.s() - 1).size;
  std::size_t images = 0;
  for (std::size_t k_mod = plan.big_n(); k_mod > last && plan.n() != plan.big_n(); k_mod /= 2) {
    const std::size_t half = k_mod / 2;
    if (half == plan.block(images).size) {
      const bool final_image = images + 1 == plan.s();
      for (std::size_t t = 0; t < half; ++t) {
        const Elem x = a[t], y = a[t + half];
        if (!final_image) a[t] = field.add(x, y);
        a[t + half] = field.sub(x, y);
      }
      ++images;
    } else {
      for (std::size_t t = 0; t < half; ++t) a[t] = field.add(a[t], a[t + half]);
    }
  }
}

/// Moves Mateer's scattered images into the block layout (block i at
/// offset(i)) using rotations only; slots [n, N) end up unspecified.
inline void mateer_compact(std::span<Elem> a, const Plan& plan) {
  detail::require_length(a, plan.big_n(), "mateer_compact");
  if (plan.n() == plan.big_n()) return;
  for (std::size_t i = plan.s(); i-- > 0;) {
    const std::size_t ni = plan.block(i).size;
    std::rotate(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(ni),
                a.begin() + static_cast<std::ptrdiff_t>(2 * ni));
  }
}

/// Evaluates f at the roots of every z^{n_i}+1: slot j of block i becomes
/// f(w_i^{2[j]+1}). The new and sergeev engines need exactly n slots; the
/// mateer engine needs N slots (f zero-padded) and leaves the result in the
/// first n.
inline void ctft_forward(std::span<Elem> a, const Plan& plan, Engine engine = Engine::kNew) {
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
    dwt(plan.field(), a.subspan(b.offset, b.size), detail::block_dwt(plan, i));
  }
}

/// Inverse cyclotomic transform on n slots: per-block inverse DWT, then
/// unbreak_in_place.
inline void ctft_inverse(std::span<Elem> a, const Plan& plan) {
  detail::require_length(a, plan.n(), "ctft_inverse");
  for (std::size_t i = 0; i < plan.s(); ++i) {
    const Block& b = plan.block(i);
    idwt(plan.field(), a.subspan(b.offset, b.size), detail::block_dwt(plan, i));
  }
  unbreak_in_place(a, plan);
}

/// Length-n polynomial overload; the mateer engine temporarily grows the
/// buffer to N slots.
inline void ctft_forward(Polynomial& a, const Plan& plan, Engine engine = Engine::kNew) {
  detail::require_length(a.span(), plan.n(), "ctft_forward");
  if (engine == Engine::kMateer) {
    a.reserve(plan.big_n());
    a.resize(plan.big_n());
    ctft_forward(a.span(), plan, engine);
    a.resize(plan.n());
    return;
  }
  ctft_forward(a.span(), plan, engine);
}

inline void ctft_inverse(Polynomial& a, const Plan& plan) { ctft_inverse(a.span(), plan); }

// --- state-checked layout wrappers -------------------------------------------

inline void reduce_to_remainders(ImageLayout& a, const Plan& plan) {
  detail::require_state(a, LayoutState::kCoefficients, "reduce_to_remainders");
  reduce_to_remainders(a.slots, plan);
  a.state = LayoutState::kRemainders;
}

inline void break_in_place(ImageLayout& a, const Plan& plan) {
  detail::require_state(a, LayoutState::kCoefficients, "break_in_place");
  break_in_place(a.slots, plan);
  a.state = LayoutState::kImages;
}

inline void sergeev_break(ImageLayout& a, const Plan& plan) {
  detail::require_state(a, LayoutState::kCoefficients, "sergeev_break");
  sergeev_break(a.slots, plan);
  a.state = LayoutState::kImages;
}

inline void unbreak_in_place(ImageLayout& a, const Plan& plan) {
  detail::require_state(a, LayoutState::kImages, "unbreak_in_place");
  unbreak_in_place(a.slots, plan);
  a.state = LayoutState::kCoefficients;
}

inline void ctft_forward(ImageLayout& a, const Plan& plan, Engine engine = Engine::kNew) {
  detail::require_state(a, LayoutState::kCoefficients, "ctft_forward");
  ctft_forward(a.slots, plan, engine);
  a.state = LayoutState::kEvaluations;
}

inline void ctft_inverse(ImageLayout& a, const Plan& plan) {
  detail::require_state(a, LayoutState::kEvaluations, "ctft_inverse");
  ctft_inverse(a.slots, plan);
  a.state = LayoutState::kCoefficients;
}

}  // namespace tft
