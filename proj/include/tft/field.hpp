#pragma once

// Prime-field arithmetic Z/pZ with exact operation counting.
//
// Every arithmetic call on a FieldCtx bumps one tally of its OpCount:
//   mul  - general ring multiplication
//   pow2 - multiplication by 2, 1/2, or a precomputed power-of-two constant
//          (including 1/N); these are the "shifted" operations
//   add  - addition, subtraction, negation
// Multiplication by the constants +1/-1 is never performed through mul().
//
// The raw_* helpers are uncounted; they exist for setup work (root
// derivation, precondition checks) that is not part of a transform.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tft/error.hpp"

namespace tft {

using Elem = std::uint64_t;

inline constexpr std::uint64_t kDefaultModulus = 2013265921ULL;  // 15 * 2^27 + 1

struct OpCount {
  std::uint64_t mul = 0;
  std::uint64_t pow2 = 0;
  std::uint64_t add = 0;

  friend OpCount operator-(const OpCount& a, const OpCount& b) {
    return {a.mul - b.mul, a.pow2 - b.pow2, a.add - b.add};
  }
  friend OpCount operator+(const OpCount& a, const OpCount& b) {
    return {a.mul + b.mul, a.pow2 + b.pow2, a.add + b.add};
  }
  OpCount& operator+=(const OpCount& o) {
    mul += o.mul;
    pow2 += o.pow2;
    add += o.add;
    return *this;
  }
  friend bool operator==(const OpCount&, const OpCount&) = default;
};

namespace detail {

__extension__ typedef unsigned __int128 u128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin; this base set is exact for all 64-bit n.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; n must be composite and odd.
inline std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, q = 1, g = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void collect_prime_factors(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_brent(n);
  collect_prime_factors(d, out);
  collect_prime_factors(n / d, out);
}

/// Distinct prime factors of n in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q < 1024 && q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  collect_prime_factors(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// The prime field Z/pZ. Immutable after construction apart from the
/// operation counter, which is mutable so that counting works through
/// const references. A FieldCtx must not be used from two threads at once;
/// copy it per thread instead (copies are cheap and carry their own counter).
class FieldCtx {
 public:
  explicit FieldCtx(std::uint64_t p = kDefaultModulus) : p_(p) {
    if (p < 3 || (p & 1) == 0 || p >= (1ULL << 63)) {
      throw DomainError("modulus must be an odd prime below 2^63, got " + std::to_string(p));
    }
    if (!detail::is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
    two_adicity_ = std::countr_zero(p - 1);
    const auto factors = detail::prime_factors(p - 1);
    for (Elem g = 2;; ++g) {
      bool ok = true;
      for (auto q : factors) {
        if (detail::powmod(g, (p - 1) / q, p) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        generator_ = g;
        break;
      }
    }
  }

  [[nodiscard]] std::uint64_t modulus() const { return p_; }
  [[nodiscard]] int two_adicity() const { return two_adicity_; }
  [[nodiscard]] Elem generator() const { return generator_; }

  // --- counted arithmetic -------------------------------------------------

  [[nodiscard]] Elem add(Elem a, Elem b) const {
    ++counter_.add;
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] Elem sub(Elem a, Elem b) const {
    ++counter_.add;
    return a >= b ? a - b : a + p_ - b;
  }
  [[nodiscard]] Elem neg(Elem a) const {
    ++counter_.add;
    return a == 0 ? 0 : p_ - a;
  }
  [[nodiscard]] Elem mul(Elem a, Elem b) const {
    ++counter_.mul;
    return detail::mulmod(a, b, p_);
  }
  /// 2a, a shifted operation.
  [[nodiscard]] Elem dbl(Elem a) const {
    ++counter_.pow2;
    Elem s = a + a;
    return s >= p_ ? s - p_ : s;
  }
  /// a/2, a shifted operation.
  [[nodiscard]] Elem half(Elem a) const {
    ++counter_.pow2;
    return (a & 1) ? (a + p_) >> 1 : a >> 1;
  }
  /// a*c where c is a power of two, its inverse, or 1/N.
  [[nodiscard]] Elem scale_pow2(Elem a, Elem c) const {
    ++counter_.pow2;
    return detail::mulmod(a, c, p_);
  }
  /// a^e by left-to-right square-and-multiply; counts each multiplication.
  [[nodiscard]] Elem pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    Elem r = a;
    for (int bit = std::bit_width(e) - 2; bit >= 0; --bit) {
      r = mul(r, r);
      if ((e >> bit) & 1) r = mul(r, a);
    }
    return r;
  }

  // --- uncounted helpers --------------------------------------------------

  [[nodiscard]] Elem raw_mul(Elem a, Elem b) const { return detail::mulmod(a, b, p_); }
  [[nodiscard]] Elem raw_pow(Elem a, std::uint64_t e) const { return detail::powmod(a, e, p_); }
  [[nodiscard]] Elem reduce(std::uint64_t v) const { return v % p_; }

  /// Multiplicative inverse via the extended Euclidean algorithm (uncounted).
  [[nodiscard]] Elem inv(Elem a) const {
    a %= p_;
    if (a == 0) throw DomainError("inverse of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
  }

  /// g^((p-1)/N): a principal N-th root of unity, N a power of two dividing
  /// 2^two_adicity. Roots of different orders are mutually consistent:
  /// root_of_unity(2N)^2 == root_of_unity(N).
  [[nodiscard]] Elem root_of_unity(std::uint64_t order) const {
    if (order == 0 || !std::has_single_bit(order)) {
      throw UnsupportedOrder("root order " + std::to_string(order) + " is not a power of two");
    }
    if (std::countr_zero(order) > two_adicity_) {
      throw UnsupportedOrder("root order " + std::to_string(order) + " exceeds 2^" +
                             std::to_string(two_adicity_) + " for p = " + std::to_string(p_));
    }
    return raw_pow(generator_, (p_ - 1) / order);
  }

  /// True iff w^N = 1 and sum_i w^(ij) = 0 for all 0 < j < N.
  [[nodiscard]] bool is_principal_root(Elem w, std::uint64_t order) const {
    if (order == 0) return false;
    w %= p_;
    if (raw_pow(w, order) != 1) return false;
    if (order == 1) return true;
    if (std::has_single_bit(order)) return raw_pow(w, order / 2) == p_ - 1;
    for (std::uint64_t j = 1; j < order; ++j) {
      Elem step = raw_pow(w, j), term = 1, sum = 0;
      for (std::uint64_t i = 0; i < order; ++i) {
        sum = (sum + term) % p_;
        term = raw_mul(term, step);
      }
      if (sum != 0) return false;
    }
    return true;
  }

  /// Running totals since construction or the last reset.
  [[nodiscard]] const OpCount& counter() const { return counter_; }
  void reset_counter() const { counter_ = {}; }

 private:
  std::uint64_t p_;
  int two_adicity_ = 0;
  Elem generator_ = 0;
  mutable OpCount counter_;
};

/// Scoped view of the operations performed on a FieldCtx.
class CountedSession {
 public:
  explicit CountedSession(const FieldCtx& field) : field_(&field), start_(field.counter()) {}

  [[nodiscard]] OpCount delta() const { return field_->counter() - start_; }
  void restart() { start_ = field_->counter(); }

 private:
  const FieldCtx* field_;
  OpCount start_;
};

inline Elem find_root_of_unity(const FieldCtx& field, std::uint64_t order) {
  return field.root_of_unity(order);
}

inline bool is_principal_root(const FieldCtx& field, Elem w, std::uint64_t order) {
  return field.is_principal_root(w, order);
}

}  // namespace tft
