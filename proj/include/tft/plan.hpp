#pragma once

// Size decomposition shared by all truncated transforms.
//
// n is written in binary as n = n_0 + n_1 + ... + n_{s-1} with
// n_0 > n_1 > ... strictly decreasing powers of two. Block i of every
// in-place layout occupies slots [offset(i), offset(i) + n_i); blocks are
// indexed from 0 throughout the library.
//
//   cyclotomic modulus of block i :  z^{n_i} + 1, canonical root w_i of order 2 n_i
//   cumulative root               :  Omega(i) = w_0 w_1 ... w_{i-1}, Omega(0) = 1
//   bit-reversed block modulus    :  z^{n_i} - Omega(i)^{n_i}

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tft/bits.hpp"
#include "tft/field.hpp"

namespace tft {

struct Block {
  std::size_t offset = 0;
  std::size_t size = 0;  // n_i, a power of two
  int exp = 0;           // log2(n_i)
  std::size_t tail = 0;  // n_{i+1} + ... + n_{s-1}
};

class Plan {
 public:
  Plan(std::size_t n, const FieldCtx& field) : field_(&field), n_(n) {
    if (n == 0) throw UnsupportedOrder("plan: length must be positive");
    const int t = field.two_adicity();
    // Block 0 needs a root of order 2 n_0.
    if (t < 1 || std::bit_floor(n) > (std::size_t{1} << (t - 1))) {
      throw UnsupportedOrder("plan: length " + std::to_string(n) + " needs a root of order " +
                             std::to_string(2 * std::bit_floor(n)) + ", unavailable for p = " +
                             std::to_string(field.modulus()));
    }
    big_n_ = std::bit_ceil(n);
    p_bits_ = std::countr_zero(big_n_);
    std::size_t offset = 0;
    for (int b = std::bit_width(n) - 1; b >= 0; --b) {
      if ((n >> b) & 1) {
        blocks_.push_back({offset, std::size_t{1} << b, b, 0});
        offset += std::size_t{1} << b;
      }
    }
    for (auto& blk : blocks_) blk.tail = n - blk.offset - blk.size;

    omega_ = field.root_of_unity(big_n_);
    half_ = field.inv(2);
    cumulative_.push_back(1);
    for (const auto& blk : blocks_) {
      const Elem wi = field.root_of_unity(2 * blk.size);
      block_root_.push_back(wi);
      block_dft_root_.push_back(field.raw_mul(wi, wi));
      cumulative_.push_back(field.raw_mul(cumulative_.back(), wi));
    }
    omega_s_inv_ = field.inv(cumulative_.back());
    Elem two_i = 1;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      image_weight_.push_back(two_i);
      image_weight_inv_.push_back(field.inv(two_i));
      two_i = field.raw_mul(two_i, 2);
    }
  }

  [[nodiscard]] const FieldCtx& field() const { return *field_; }
  [[nodiscard]] std::size_t n() const { return n_; }
  /// Least power of two >= n.
  [[nodiscard]] std::size_t big_n() const { return big_n_; }
  [[nodiscard]] int p_bits() const { return p_bits_; }
  [[nodiscard]] std::size_t s() const { return blocks_.size(); }
  [[nodiscard]] const std::vector<Block>& blocks() const { return blocks_; }
  [[nodiscard]] const Block& block(std::size_t i) const { return blocks_.at(i); }

  /// Principal N-th root of unity.
  [[nodiscard]] Elem omega() const { return omega_; }
  /// w_i = omega^{N / (2 n_i)}, a root of z^{n_i} + 1.
  [[nodiscard]] Elem block_root(std::size_t i) const { return block_root_.at(i); }
  /// w_i^2, a principal n_i-th root of unity.
  [[nodiscard]] Elem block_dft_root(std::size_t i) const { return block_dft_root_.at(i); }
  /// Omega(i) = w_0 ... w_{i-1}; Omega(0) = 1, Omega(s) is the affine shift.
  [[nodiscard]] Elem cumulative_root(std::size_t i) const { return cumulative_.at(i); }
  [[nodiscard]] Elem shift() const { return cumulative_.back(); }
  [[nodiscard]] Elem shift_inv() const { return omega_s_inv_; }
  [[nodiscard]] Elem half() const { return half_; }
  /// 2^i, the factor turning weighted image i into image i.
  [[nodiscard]] Elem image_weight(std::size_t i) const { return image_weight_.at(i); }
  [[nodiscard]] Elem image_weight_inv(std::size_t i) const { return image_weight_inv_.at(i); }

  /// Block holding slot l.
  [[nodiscard]] std::size_t block_of(std::size_t l) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (l < blocks_[i].offset + blocks_[i].size) return i;
    }
    throw RangeError("slot " + std::to_string(l) + " outside plan of length " + std::to_string(n_));
  }

  friend bool operator==(const Plan& a, const Plan& b) {
    return a.field_->modulus() == b.field_->modulus() && a.n_ == b.n_ && a.omega_ == b.omega_ &&
           a.block_root_ == b.block_root_;
  }

 private:
  const FieldCtx* field_;
  std::size_t n_;
  std::size_t big_n_ = 1;
  int p_bits_ = 0;
  std::vector<Block> blocks_;
  Elem omega_ = 1;
  Elem half_ = 1;
  std::vector<Elem> block_root_;
  std::vector<Elem> block_dft_root_;
  std::vector<Elem> cumulative_;
  Elem omega_s_inv_ = 1;
  std::vector<Elem> image_weight_;
  std::vector<Elem> image_weight_inv_;
};

inline Plan plan_new(std::size_t n, const FieldCtx& field) { return Plan(n, field); }

struct EvalPointSet {
  std::vector<Elem> points;
  std::vector<std::size_t> block;  // owning block of each point
};

/// Roots of z^{n_i}+1 in the order the per-block negacyclic DWT writes them:
/// slot j of block i is w_i^{2 [j] + 1}, [j] reversed over log2(n_i) bits.
inline EvalPointSet eval_points_cyclotomic(const Plan& plan) {
  const FieldCtx& f = plan.field();
  EvalPointSet out;
  for (std::size_t i = 0; i < plan.s(); ++i) {
    const Block& blk = plan.block(i);
    for (std::size_t j = 0; j < blk.size; ++j) {
      out.points.push_back(f.raw_pow(plan.block_root(i), 2 * bit_reverse(j, blk.exp) + 1));
      out.block.push_back(i);
    }
  }
  return out;
}

/// omega^{[l]} for l = 0..n-1, [l] reversed over log2(N) bits.
inline EvalPointSet eval_points_bitreversed(const Plan& plan) {
  const FieldCtx& f = plan.field();
  EvalPointSet out;
  for (std::size_t l = 0; l < plan.n(); ++l) {
    out.points.push_back(f.raw_pow(plan.omega(), bit_reverse(l, plan.p_bits())));
    out.block.push_back(plan.block_of(l));
  }
  return out;
}

/// Bits that must all be set in an exponent e of block j's image for the
/// term z^e to reach image k (j < k): the sizes n_l for j < l < k.
inline std::uint64_t criterion_mask(const Plan& plan, std::size_t j, std::size_t k) {
  if (!(j < k && k < plan.s())) {
    throw UsageError("criterion: need j < k < s, got j=" + std::to_string(j) +
                     " k=" + std::to_string(k) + " s=" + std::to_string(plan.s()));
  }
  std::uint64_t mask = 0;
  for (std::size_t l = j + 1; l < k; ++l) mask |= plan.block(l).size;
  return mask;
}

/// Whether a term z^e of image j contributes to image k.
inline bool nonzero_criterion(std::uint64_t e, std::size_t j, std::size_t k, const Plan& plan) {
  const std::uint64_t mask = criterion_mask(plan, j, k);
  if (e >= plan.block(j).size) {
    throw RangeError("criterion: exponent " + std::to_string(e) + " >= n_j");
  }
  return covers(e, mask);
}

/// Smallest e' > e below n_j satisfying nonzero_criterion(e', j, k).
inline std::optional<std::uint64_t> next_satisfying_exponent(std::uint64_t e, std::size_t j,
                                                             std::size_t k, const Plan& plan) {
  const std::uint64_t next = next_covering(e, criterion_mask(plan, j, k));
  if (next >= plan.block(j).size) return std::nullopt;
  return next;
}

/// Sign bit of the contribution of z^e to image k: z^e = (-1)^bit z^{e mod n_k}.
inline unsigned contribution_sign(std::uint64_t e, std::size_t k, const Plan& plan) {
  return bit(e, plan.block(k).exp);
}

}  // namespace tft
