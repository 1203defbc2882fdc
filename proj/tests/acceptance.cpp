// Acceptance checks AC1..AC8. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "alloc_counter.hpp"
#include "random_poly.hpp"
#include "sweeps.hpp"
#include "tft/tft.hpp"

using namespace tft;
using testing_support::random_poly;

namespace {

constexpr std::size_t kMaxN = 512;
constexpr std::size_t kPolysPerN = 20;
constexpr Engine kEngines[] = {Engine::kNew, Engine::kSergeev, Engine::kMateer};

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
  std::printf("%s %s %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::uint64_t seed_of(std::size_t n, std::size_t r) { return splitmix64(n * 1000 + r); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void ac1(const FieldCtx& f) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (std::size_t n = 1; n <= kMaxN; ++n) {
    const Plan plan(n, f);
    const auto pts = eval_points_cyclotomic(plan);
    for (std::size_t r = 0; r < kPolysPerN; ++r) {
      const auto p = random_poly(f, n, seed_of(n, r));
      const auto want = oracle::eval_all(f, p.span(), pts.points);
      for (Engine e : kEngines) {
        Polynomial a = p;
        ctft_forward(a, plan, e);
        ++checked;
        if (a.coeffs() != want && bad++ == 0) {
          first = " first at n=" + std::to_string(n) + " engine=" + engine_name(e);
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "ctft_forward vs naive evaluation: %zu transforms, %zu mismatches, %.1fs (budget 60s)",
                checked, bad, secs);
  report("AC1", bad == 0 && secs <= 60.0, buf + first);
}

void ac2_ac3(const FieldCtx& f) {
  std::size_t bridge = 0, bridge_bad = 0, trips = 0, trips_bad = 0;
  for (std::size_t n = 1; n <= kMaxN; ++n) {
    const Plan plan(n, f);
    for (std::size_t r = 0; r < kPolysPerN; ++r) {
      const auto p = random_poly(f, n, seed_of(n, r));
      std::vector<Elem> full = p.coeffs();
      full.resize(plan.big_n(), 0);
      fft_in_place(f, full, plan.omega());
      full.resize(n);
      for (Engine e : kEngines) {
        Polynomial a = p;
        brtft_forward(a, plan, e);
        ++bridge;
        if (a.coeffs() != full) ++bridge_bad;
        brtft_inverse(a, plan);
        ++trips;
        if (a != p) ++trips_bad;
        Polynomial c = p;
        ctft_forward(c, plan, e);
        ctft_inverse(c, plan);
        ++trips;
        if (c != p) ++trips_bad;
      }
    }
  }
  report("AC2", bridge_bad == 0,
         "brtft_forward vs padded bit-reversed FFT prefix: " + std::to_string(bridge) +
             " transforms, " + std::to_string(bridge_bad) + " mismatches");
  report("AC3", trips_bad == 0,
         "inverse∘forward identity (ctft and brtft): " + std::to_string(trips) + " round trips, " +
             std::to_string(trips_bad) + " mismatches");
}

void ac4(const FieldCtx& f) {
  bool ok = true;
  std::string detail;
  for (std::size_t n : {86u, 255u, 256u, 257u, 1000u, 4096u}) {
    const Plan plan(n, f);
    const auto p = random_poly(f, n, n);
    const double nd = static_cast<double>(n);
    const double big = static_cast<double>(plan.big_n());

    auto a = p.coeffs();
    BreakProfile prof;
    CountedSession s(f);
    break_in_place(a, plan, &prof);
    const OpCount br = s.delta();
    const bool break_ok = br.add <= 3 * n && br.pow2 <= 2 * n && br.mul == 0;
    const bool contrib_ok = prof.contributions.add <= 2 * n && prof.contributions.mul == 0;

    auto b = p.coeffs();
    b.resize(plan.big_n(), 0);
    s.restart();
    fft_in_place(f, b, plan.omega());
    const OpCount ff = s.delta();
    const double lg_big = std::log2(big);
    const bool fft_ok = static_cast<double>(ff.mul) <= 0.5 * big * lg_big + 2 * big &&
                        ff.add == plan.big_n() * static_cast<std::size_t>(plan.p_bits());

    Polynomial c = p;
    s.restart();
    ctft_forward(c, plan, Engine::kNew);
    const OpCount ct = s.delta();
    const double ct_bound = 0.5 * nd * std::log2(nd) + 4 * nd;
    const bool ctft_ok = static_cast<double>(ct.mul) <= ct_bound;

    ok = ok && break_ok && contrib_ok && fft_ok && ctft_ok;
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "\n    n=%zu break add %llu/%zu pow2 %llu/%zu mul %llu; contrib add %llu/%zu; "
                  "fft mul %llu/%.0f add %llu/%zu; ctft mul %llu/%.0f",
                  n, (unsigned long long)br.add, 3 * n, (unsigned long long)br.pow2, 2 * n,
                  (unsigned long long)br.mul, (unsigned long long)prof.contributions.add, 2 * n,
                  (unsigned long long)ff.mul, 0.5 * big * lg_big + 2 * big,
                  (unsigned long long)ff.add, plan.big_n() * plan.p_bits(),
                  (unsigned long long)ct.mul, ct_bound);
    detail += buf;
  }
  report("AC4", ok, "counted bounds at n in {86,255,256,257,1000,4096}" + detail);
}

void ac5(const FieldCtx& f) {
  const auto rows = run_bench(f, 248, 264, 1);
  auto mul_of = [&](std::size_t n, const std::string& algo) {
    for (const auto& r : rows) {
      if (r.n == n && r.algo == algo) return static_cast<double>(r.mul);
    }
    return 0.0;
  };
  const double fft_ratio = mul_of(257, "fft_mul") / mul_of(256, "fft_mul");
  const double ctft_ratio = mul_of(257, "ctft_mul") / mul_of(256, "ctft_mul");
  const double brtft_ratio = mul_of(257, "brtft_mul") / mul_of(256, "brtft_mul");
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "mul(257)/mul(256): full FFT %.3f (need >= 1.8), cyclotomic TFT %.3f (need <= 1.15); "
                "bit-reversed TFT %.3f (informational)",
                fft_ratio, ctft_ratio, brtft_ratio);
  report("AC5", fft_ratio >= 1.8 && ctft_ratio <= 1.15, buf);
}

void ac6(const FieldCtx& f) {
  std::size_t checks = 0, bad = 0;
  std::string first;
  for (std::size_t n = 1; n <= 256; ++n) {
    const Plan plan(n, f);
    const auto r = testing_support::crt_identity_sweep(f, plan);
    checks += r.checks;
    if (r.failures && bad == 0) first = " first at n=" + std::to_string(n) + " " + r.first_failure;
    bad += r.failures;
    for (std::size_t k = 1; k < plan.s(); ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t count = 0;
        for (std::uint64_t e = 0; e < plan.block(j).size; ++e) count += nonzero_criterion(e, j, k, plan);
        ++checks;
        if (count != plan.block(j).size >> (k - j - 1)) {
          if (bad++ == 0) first = " density at n=" + std::to_string(n);
        }
      }
    }
  }
  const Plan p86(86, f);
  const Elem m4 = f.modulus() - 4;
  const bool row20 = testing_support::combined_image_example(f, p86, 20) == std::vector<Elem>{4, 0};
  const bool row33 = testing_support::combined_image_example(f, p86, 33) == std::vector<Elem>{0, 0};
  const bool row23 = testing_support::combined_image_example(f, p86, 23) == std::vector<Elem>{0, m4};
  report("AC6", bad == 0 && row20 && row33 && row23,
         "combination identities for n <= 256: " + std::to_string(checks) + " checks, " +
             std::to_string(bad) + " failures; n=86 rows e=20/33/23: " + (row20 ? "ok" : "bad") +
             "/" + (row33 ? "ok" : "bad") + "/" + (row23 ? "ok" : "bad") + first);
}

void ac7(const FieldCtx& f) {
  const Elem w = f.root_of_unity(8);
  const Elem w2 = f.raw_mul(w, w);
  const Elem p = f.modulus();
  const std::vector<Elem> g = {p - 1, 0, 0, (1 + p - w2) % p, p - 1, (1 + w2) % p};
  const auto v = oracle::pruned_dft(f, g, {0, 3, 4, 5}, w, 8);
  const bool ok = v == std::vector<Elem>(4, 0);
  report("AC7", ok, std::string("pruned DFT on S={0,3,4,5}, N=8 of the kernel polynomial: ") +
                        (ok ? "all zero" : "nonzero entry"));
}

void ac8(const FieldCtx& f) {
  constexpr std::size_t kAuxLimit = 16 * sizeof(Elem);
  bool ok = true;
  std::string detail;
  for (std::size_t n : {3u, 86u, 257u, 1000u, 4097u, 20000u}) {
    const Plan plan(n, f);
    std::size_t worst = 0;
    for (Engine e : {Engine::kNew, Engine::kSergeev}) {
      auto a = random_poly(f, n, n);
      alloc_counter::AllocScope scope;
      ctft_forward(a.span(), plan, e);
      ctft_inverse(a.span(), plan);
      brtft_forward(a.span(), plan, e);
      brtft_inverse(a.span(), plan);
      worst = std::max(worst, scope.finish().bytes);
    }
    auto m = random_poly(f, n, n);
    m.coeffs().shrink_to_fit();
    alloc_counter::AllocScope scope;
    ctft_forward(m, plan, Engine::kMateer);
    const auto mateer = scope.finish().bytes;
    const bool row_ok = worst <= kAuxLimit && mateer == plan.big_n() * sizeof(Elem);
    ok = ok && row_ok;
    detail += " n=" + std::to_string(n) + ":" + std::to_string(worst) + "B/" +
              std::to_string(mateer / sizeof(Elem)) + "of" + std::to_string(plan.big_n());
  }
  report("AC8", ok,
         "heap bytes for new+sergeev (limit " + std::to_string(kAuxLimit) +
             "B) / mateer slots of N:" + detail);
}

}  // namespace

int main() {
  const FieldCtx f;
  ac1(f);
  ac2_ac3(f);
  ac4(f);
  ac5(f);
  ac6(f);
  ac7(f);
  ac8(f);
  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
