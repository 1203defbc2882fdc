#pragma once

// Command-line front end. run_command is kept separate from main() so the
// tests can drive it with in-memory streams.
//
// Exit status: 0 success, 1 verification failure, 2 usage or format error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tft/bench.hpp"
#include "tft/bridge.hpp"
#include "tft/cyclotomic.hpp"
#include "tft/multiply.hpp"
#include "tft/polyfile.hpp"
#include "tft/selftest.hpp"

namespace tft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerify = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline PolyFile load(const std::string& path) {
  if (path == "-") return read_poly(std::cin, "<stdin>");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return read_poly(in, path);
}

inline void store(const std::string& path, std::uint64_t modulus, const Polynomial& poly,
                  std::ostream& out) {
  if (path == "-") {
    write_poly(out, modulus, poly);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  write_poly(file, modulus, poly);
  file.flush();
  if (!file) throw UsageError("failed writing '" + path + "'");
}

/// Field for a file: its own p, unless --modulus was given and disagrees.
inline std::uint64_t resolve_modulus(const PolyFile& file, const std::string& path,
                                     bool flag_given, std::uint64_t flag) {
  if (flag_given && flag != file.modulus) {
    throw FormatError(path + ": file modulus " + std::to_string(file.modulus) +
                      " differs from --modulus " + std::to_string(flag));
  }
  return file.modulus;
}

}  // namespace detail

inline int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated Fourier transforms over prime fields"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t modulus = kDefaultModulus;
  std::string engine_str = "new";
  std::uint64_t seed = 1;
  auto* modulus_opt = app.add_option("--modulus", modulus, "prime modulus")->capture_default_str();
  const std::map<std::string, Engine> engines = {
      {"new", Engine::kNew}, {"sergeev", Engine::kSergeev}, {"mateer", Engine::kMateer}};
  app.add_option("--engine", engine_str, "break engine: new, sergeev or mateer")
      ->check(CLI::IsMember({"new", "sergeev", "mateer"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for random inputs")->capture_default_str();

  struct Transform {
    std::string name, help, input, output;
    CLI::App* sub = nullptr;
  };
  std::vector<Transform> transforms = {
      {"ctft-fwd", "forward cyclotomic TFT", "", "", nullptr},
      {"ctft-inv", "inverse cyclotomic TFT", "", "", nullptr},
      {"brtft-fwd", "forward bit-reversed TFT", "", "", nullptr},
      {"brtft-inv", "inverse bit-reversed TFT", "", "", nullptr},
  };
  for (auto& t : transforms) {
    t.sub = app.add_subcommand(t.name, t.help);
    t.sub->add_option("input", t.input, "polynomial file ('-' for stdin)")->required();
    t.sub->add_option("output", t.output, "result file ('-' for stdout)")->required();
  }

  std::string mul_a, mul_b, mul_out, mul_path = "cyclotomic";
  auto* mul = app.add_subcommand("mul", "multiply two polynomials");
  mul->add_option("a", mul_a, "first factor")->required();
  mul->add_option("b", mul_b, "second factor")->required();
  mul->add_option("output", mul_out, "product file ('-' for stdout)")->required();
  mul->add_option("--path", mul_path, "cyclotomic, bitreversed or fft")
      ->check(CLI::IsMember({"cyclotomic", "bitreversed", "fft"}))
      ->capture_default_str();

  std::size_t bench_min = 1, bench_max = 64;
  std::string bench_csv;
  auto* bench = app.add_subcommand("bench", "operation-count benchmark to CSV");
  bench->add_option("--min", bench_min, "smallest length")->required()->check(CLI::PositiveNumber);
  bench->add_option("--max", bench_max, "largest length")->required()->check(CLI::PositiveNumber);
  bench->add_option("--csv", bench_csv, "output CSV path")->required();

  SelftestOptions st_opt;
  auto* selftest = app.add_subcommand("selftest", "run the oracle equivalence checks");
  selftest->add_option("--max-n", st_opt.max_n, "largest length checked")->capture_default_str();
  selftest->add_option("--polys", st_opt.polys_per_n, "random inputs per length")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const bool modulus_given = modulus_opt->count() > 0;
  const Engine engine = engines.at(engine_str);

  try {
    for (const auto& t : transforms) {
      if (!t.sub->parsed()) continue;
      const PolyFile file = detail::load(t.input);
      const FieldCtx field(detail::resolve_modulus(file, t.input, modulus_given, modulus));
      Polynomial a = file.poly;
      if (a.empty()) throw FormatError(t.input + ": transform needs at least one coefficient");
      const Plan plan(a.size(), field);
      if (t.name == "ctft-fwd") {
        ctft_forward(a, plan, engine);
      } else if (t.name == "ctft-inv") {
        ctft_inverse(a, plan);
      } else if (t.name == "brtft-fwd") {
        brtft_forward(a, plan, engine);
      } else {
        brtft_inverse(a, plan);
      }
      detail::store(t.output, field.modulus(), a, out);
      return kExitOk;
    }

    if (mul->parsed()) {
      const PolyFile fa = detail::load(mul_a);
      const PolyFile fb = detail::load(mul_b);
      const std::uint64_t p = detail::resolve_modulus(fa, mul_a, modulus_given, modulus);
      if (fb.modulus != p) {
        throw FormatError(mul_b + ": modulus " + std::to_string(fb.modulus) + " differs from " +
                          mul_a + " modulus " + std::to_string(p));
      }
      const FieldCtx field(p);
      Polynomial prod;
      if (mul_path == "fft") {
        prod = multiply_full_fft(fa.poly, fb.poly, field);
      } else {
        const TftPath path = mul_path == "cyclotomic" ? TftPath::kCyclotomic : TftPath::kBitReversed;
        prod = multiply_tft(fa.poly, fb.poly, field, path, engine);
      }
      detail::store(mul_out, p, prod, out);
      return kExitOk;
    }

    if (bench->parsed()) {
      const FieldCtx field(modulus);
      const auto rows = run_bench(field, bench_min, bench_max, seed, engine);
      emit_csv(rows, bench_csv);
      out << "wrote " << rows.size() << " rows to " << bench_csv << '\n';
      return kExitOk;
    }

    if (selftest->parsed()) {
      const FieldCtx field(modulus);
      st_opt.seed = seed;
      return run_selftest(field, out, st_opt) ? kExitOk : kExitVerify;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tft::cli
