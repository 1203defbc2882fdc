#pragma once

// Operation-count benchmark. Each row records the counted cost of exactly
// one forward transform, or one full multiplication, at length n.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "tft/bridge.hpp"
#include "tft/cyclotomic.hpp"
#include "tft/fft.hpp"
#include "tft/multiply.hpp"

namespace tft {

struct BenchRow {
  std::size_t n = 0;
  std::string algo;
  std::uint64_t mul = 0;
  std::uint64_t pow2 = 0;
  std::uint64_t add = 0;
  std::uint64_t wall_nanos = 0;
};

/// Algorithms in the order they appear for each n.
inline const std::vector<std::string>& bench_algos() {
  static const std::vector<std::string> algos = {"fft",     "ctft",     "brtft",
                                                 "fft_mul", "ctft_mul", "brtft_mul"};
  return algos;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Generator for one (n, algo) cell; independent of evaluation order.
inline std::mt19937_64 row_rng(std::uint64_t seed, std::size_t n, std::size_t algo) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(n * 64 + algo)));
}

inline Polynomial random_poly(std::mt19937_64& rng, const FieldCtx& field, std::size_t len,
                              bool nonzero_lead = false) {
  std::uniform_int_distribution<Elem> any(0, field.modulus() - 1);
  std::uniform_int_distribution<Elem> nonzero(1, field.modulus() - 1);
  Polynomial f(len);
  for (std::size_t i = 0; i < len; ++i) f[i] = any(rng);
  if (nonzero_lead && len > 0) f[len - 1] = nonzero(rng);
  return f;
}

inline BenchRow bench_one(const FieldCtx& field, std::size_t n, std::size_t algo_index,
                          std::uint64_t seed, Engine engine) {
  const std::string& algo = bench_algos().at(algo_index);
  auto rng = row_rng(seed, n, algo_index);
  BenchRow row{n, algo, 0, 0, 0, 0};

  Polynomial f, g, work;
  std::size_t df = 0, dg = 0;
  const bool is_mul = algo.ends_with("_mul");
  if (is_mul) {
    df = (n - 1) / 2;
    dg = n - 1 - df;
    f = random_poly(rng, field, df + 1, true);
    g = random_poly(rng, field, dg + 1, true);
  } else {
    work = random_poly(rng, field, n);
  }
  const Elem big_w = field.root_of_unity(std::bit_ceil(n));
  const Plan plan(n, field);

  const auto t0 = std::chrono::steady_clock::now();
  CountedSession session(field);
  if (algo == "fft") {
    work.resize(std::bit_ceil(n));
    fft_in_place(field, work.span(), big_w);
  } else if (algo == "ctft") {
    ctft_forward(work, plan, engine);
  } else if (algo == "brtft") {
    brtft_forward(work, plan, engine);
  } else if (algo == "fft_mul") {
    work = multiply_full_fft(f, g, field);
  } else if (algo == "ctft_mul") {
    work = multiply_tft(f, g, field, TftPath::kCyclotomic, engine);
  } else {
    work = multiply_tft(f, g, field, TftPath::kBitReversed, engine);
  }
  const OpCount c = session.delta();
  const auto t1 = std::chrono::steady_clock::now();
  row.mul = c.mul;
  row.pow2 = c.pow2;
  row.add = c.add;
  row.wall_nanos = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  return row;
}

/// One row per algorithm for every n in [min_n, max_n].
inline std::vector<BenchRow> run_bench(const FieldCtx& field, std::size_t min_n, std::size_t max_n,
                                       std::uint64_t seed, Engine engine = Engine::kNew) {
  if (min_n == 0 || min_n > max_n) throw UsageError("bench: need 1 <= min <= max");
  std::vector<BenchRow> rows;
  for (std::size_t n = min_n; n <= max_n; ++n) {
    for (std::size_t a = 0; a < bench_algos().size(); ++a) {
      rows.push_back(bench_one(field, n, a, seed, engine));
    }
  }
  return rows;
}

inline void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n,algo,mul,pow2,add,wall_nanos\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.algo << ',' << r.mul << ',' << r.pow2 << ',' << r.add << ','
        << r.wall_nanos << '\n';
  }
}

inline void emit_csv(const std::vector<BenchRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  write_csv(out, rows);
  out.flush();
  if (!out) throw UsageError("failed writing '" + path + "'");
}

/// Rows of one algorithm, in increasing n.
inline std::vector<BenchRow> rows_for(const std::vector<BenchRow>& rows, const std::string& algo) {
  std::vector<BenchRow> out;
  for (const auto& r : rows) {
    if (r.algo == algo) out.push_back(r);
  }
  return out;
}

}  // namespace tft
