#pragma once

// Reduced oracle sweeps behind the `selftest` command.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "tft/bench.hpp"
#include "tft/bridge.hpp"
#include "tft/cyclotomic.hpp"
#include "tft/fft.hpp"
#include "tft/multiply.hpp"
#include "tft/oracle.hpp"

namespace tft {

struct SelftestOptions {
  std::size_t max_n = 64;
  std::size_t polys_per_n = 3;
  std::uint64_t seed = 1;
};

/// Runs every transform against the oracles; reports failures to `log`.
inline bool run_selftest(const FieldCtx& field, std::ostream& log, const SelftestOptions& opt = {}) {
  std::size_t failures = 0;
  auto fail = [&](const char* what, std::size_t n, const char* detail) {
    if (++failures <= 20) log << "FAIL " << what << " n=" << n << ' ' << detail << '\n';
  };
  for (std::size_t n = 1; n <= opt.max_n; ++n) {
    const Plan plan(n, field);
    const auto cyc_points = eval_points_cyclotomic(plan);
    const Elem w = plan.omega();
    for (std::size_t r = 0; r < opt.polys_per_n; ++r) {
      auto rng = row_rng(opt.seed, n, r);
      const Polynomial f = random_poly(rng, field, n);
      const auto expect = oracle::eval_all(field, f.span(), cyc_points.points);

      for (Engine e : {Engine::kNew, Engine::kSergeev, Engine::kMateer}) {
        Polynomial a = f;
        ctft_forward(a, plan, e);
        if (a.coeffs() != expect) fail("ctft_forward", n, engine_name(e));
        ctft_inverse(a, plan);
        if (a != f) fail("ctft_inverse", n, engine_name(e));

        Polynomial b = f;
        brtft_forward(b, plan, e);
        Polynomial full = f;
        full.resize(plan.big_n());
        fft_in_place(field, full.span(), w);
        full.resize(n);
        if (b != full) fail("brtft_forward", n, engine_name(e));
        brtft_inverse(b, plan);
        if (b != f) fail("brtft_inverse", n, engine_name(e));
      }

      const std::size_t df = (n - 1) / 2;
      Polynomial g = random_poly(rng, field, df + 1, true);
      Polynomial h = random_poly(rng, field, n - df, true);
      const auto ref = oracle::schoolbook_mul(field, g.span(), h.span());
      if (multiply_full_fft(g, h, field).coeffs() != ref) fail("multiply_full_fft", n, "");
      for (TftPath path : {TftPath::kCyclotomic, TftPath::kBitReversed}) {
        if (multiply_tft(g, h, field, path).coeffs() != ref) fail("multiply_tft", n, path_name(path));
      }
    }
  }
  log << (failures == 0 ? "selftest: all checks passed" : "selftest: failures found") << " (n <= "
      << opt.max_n << ", " << opt.polys_per_n << " polynomials per n)\n";
  return failures == 0;
}

}  // namespace tft
