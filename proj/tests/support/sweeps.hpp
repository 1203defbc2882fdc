#pragma once

// Exhaustive checks of the image-combination identities: with every image
// zero except image j = z^e, the Chinese-remainder combination C of the first
// `count` images satisfies
//   C mod (z^m - 1)     = 2^{count-1-j} z^{e mod m}                     (m <= n_{count-1})
//   C mod (z^{n_k} + 1) = (-1)^{e[log n_k]} 2^{count-1-j} z^{e mod n_k}  (k >= count)
// when e has every bit n_l, j < l < count, set, and both are zero otherwise.

#include <sstream>
#include <string>
#include <vector>

#include "tft/oracle.hpp"

namespace testing_support {

struct SweepResult {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

inline SweepResult crt_identity_sweep(const tft::FieldCtx& f, const tft::Plan& plan) {
  using tft::Elem;
  SweepResult res;
  const Elem p = f.modulus();
  auto record = [&](bool ok, std::size_t j, std::uint64_t e, std::size_t count, const char* what,
                    std::size_t m) {
    ++res.checks;
    if (ok) return;
    if (res.failures++ == 0) {
      std::ostringstream os;
      os << what << " j=" << j << " e=" << e << " count=" << count << " m=" << m;
      res.first_failure = os.str();
    }
  };
  std::vector<std::vector<Elem>> images;
  for (const auto& b : plan.blocks()) images.emplace_back(b.size, 0);
  for (std::size_t j = 0; j < plan.s(); ++j) {
    for (std::uint64_t e = 0; e < plan.block(j).size; ++e) {
      images[j][e] = 1;
      const auto combos = tft::oracle::crt_from_images(f, plan, images);
      images[j][e] = 0;
      std::uint64_t mask = 0;
      Elem weight = 1;
      for (std::size_t count = j + 1; count <= plan.s(); ++count) {
        if (count > j + 1) {
          mask |= plan.block(count - 1).size;
          weight = f.raw_mul(weight, 2);
        }
        const bool alive = tft::covers(e, mask);
        const auto& c = combos[count - 1];
        for (std::size_t m = 1; m <= plan.block(count - 1).size; m *= 2) {
          std::vector<Elem> want(m, 0);
          if (alive) want[e % m] = weight;
          record(tft::oracle::naive_mod_reduce(f, c, m, 1) == want, j, e, count, "z^m-1", m);
        }
        for (std::size_t k = count; k < plan.s(); ++k) {
          const auto& b = plan.block(k);
          std::vector<Elem> want(b.size, 0);
          if (alive) want[e % b.size] = tft::bit(e, b.exp) ? p - weight : weight;
          record(tft::oracle::naive_mod_reduce(f, c, b.size, p - 1) == want, j, e, count, "phi_k",
                 b.size);
        }
      }
    }
  }
  return res;
}

/// C_3 mod (z^2 + 1) for n = 86 with image 0 = z^e and images 1, 2 zero,
/// computed by long division of the combined polynomial.
inline std::vector<tft::Elem> combined_image_example(const tft::FieldCtx& f, const tft::Plan& plan,
                                                     std::uint64_t e) {
  std::vector<std::vector<tft::Elem>> images;
  for (const auto& b : plan.blocks()) images.emplace_back(b.size, 0);
  images[0][e] = 1;
  const auto source = tft::oracle::crt_from_images(f, plan, images)[2];
  const auto img = tft::oracle::combined_image(f, source, plan, 3);
  return tft::oracle::naive_mod_reduce(f, img.combined, 2, f.modulus() - 1);
}

}  // namespace testing_support
