#include <gtest/gtest.h>

#include <vector>

#include "random_poly.hpp"
#include "tft/bridge.hpp"
#include "tft/oracle.hpp"

using testing_support::random_poly;
using tft::Elem;
using tft::Engine;
using tft::FieldCtx;
using tft::Plan;
using tft::Polynomial;

namespace {

std::vector<Elem> padded_fft_prefix(const FieldCtx& f, const Plan& plan, const Polynomial& p) {
  std::vector<Elem> a = p.coeffs();
  a.resize(plan.big_n(), 0);
  tft::fft_in_place(f, a, plan.omega());
  a.resize(plan.n());
  return a;
}

}  // namespace

TEST(Brtft, SmallExample) {
  const FieldCtx f(5);
  const Plan plan(3, f);
  for (Engine e : {Engine::kNew, Engine::kSergeev, Engine::kMateer}) {
    EXPECT_EQ(tft::brtft(Polynomial{1, 2, 3}, plan, e).values, (std::vector<Elem>{1, 2, 2}));
  }
  Polynomial v{1, 2, 2};
  tft::brtft_inverse(v, plan);
  EXPECT_EQ(v, (Polynomial{1, 2, 3}));
}

TEST(Brtft, PowerOfTwoIsPlainFft) {
  const FieldCtx f;
  for (std::size_t n : {1u, 2u, 128u}) {
    const Plan plan(n, f);
    const auto p = random_poly(f, n, n);
    Polynomial a = p;
    tft::brtft_forward(a, plan);
    std::vector<Elem> b = p.coeffs();
    tft::fft_in_place(f, b, plan.omega());
    EXPECT_EQ(a.coeffs(), b);
  }
  Polynomial one{9};
  tft::brtft_forward(one, Plan(1, f));
  tft::brtft_inverse(one, Plan(1, f));
  EXPECT_EQ(one, Polynomial{9});
}

TEST(Brtft, MatchesPaddedFftAndRoundTrips) {
  const FieldCtx f;
  for (std::size_t n = 1; n <= 300; ++n) {
    const Plan plan(n, f);
    const auto p = random_poly(f, n, 1000 + n);
    const auto want = padded_fft_prefix(f, plan, p);
    for (Engine e : {Engine::kNew, Engine::kSergeev, Engine::kMateer}) {
      Polynomial a = p;
      tft::brtft_forward(a, plan, e);
      ASSERT_EQ(a.coeffs(), want) << n << ' ' << engine_name(e);
      tft::brtft_inverse(a, plan);
      ASSERT_EQ(a, p) << n;
    }
  }
}

TEST(Brtft, OutputsArePsiEvaluations) {
  const FieldCtx f;
  const Plan plan(86, f);
  const auto p = random_poly(f, 86, 5);
  const auto out = tft::brtft(p, plan).values;
  const auto pts = tft::eval_points_bitreversed(plan);
  EXPECT_EQ(out, tft::oracle::eval_all(f, p.span(), pts.points));
}

TEST(Brtft, CostBelowDoubledFft) {
  const FieldCtx f;
  for (std::size_t k : {6u, 8u, 10u}) {
    const std::size_t n = (std::size_t{1} << k) + 1;
    const Plan plan(n, f);
    Polynomial a = random_poly(f, n, k);
    tft::CountedSession s(f);
    tft::brtft_forward(a, plan);
    tft::brtft_inverse(a, plan);
    const auto tft_cost = s.delta().mul;
    std::vector<Elem> b = random_poly(f, plan.big_n(), k).coeffs();
    s.restart();
    tft::fft_in_place(f, b, plan.omega());
    tft::ifft_in_place(f, b, plan.omega());
    EXPECT_LT(tft_cost, s.delta().mul) << n;
  }
}
