#pragma once

// Polynomial file format:
//
//   p <modulus>
//   n <length>
//   a_0 a_1 ... a_{n-1}
//
// Coefficients are decimal, each in [0, p), separated by any whitespace
// and possibly spread over several lines. Lines whose first non-blank
// character is '#' are comments; blank lines are ignored.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "tft/error.hpp"
#include "tft/polynomial.hpp"

namespace tft {

struct PolyFile {
  std::uint64_t modulus = kDefaultModulus;
  Polynomial poly;
};

namespace detail {

inline std::uint64_t parse_u64(std::string_view tok, const std::string& where) {
  std::uint64_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw FormatError(where + ": expected a non-negative decimal integer, got '" +
                      std::string(tok) + "'");
  }
  return v;
}

}  // namespace detail

inline PolyFile read_poly(std::istream& in, const std::string& name = "<input>") {
  PolyFile out;
  std::string line;
  std::size_t lineno = 0;
  int header = 0;  // 0: expecting p, 1: expecting n, 2: coefficients
  std::size_t expected = 0;
  std::vector<Elem> coeffs;
  auto where = [&] { return name + ":" + std::to_string(lineno); };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string tok;
    if (header < 2) {
      std::string key, value, extra;
      tokens >> key >> value;
      if (tokens >> extra || value.empty()) {
        throw FormatError(where() + ": expected '" + (header == 0 ? "p" : "n") + " <value>'");
      }
      if (header == 0) {
        if (key != "p") throw FormatError(where() + ": expected 'p <modulus>', got '" + key + "'");
        out.modulus = detail::parse_u64(value, where());
      } else {
        if (key != "n") throw FormatError(where() + ": expected 'n <length>', got '" + key + "'");
        expected = detail::parse_u64(value, where());
        coeffs.reserve(std::min<std::size_t>(expected, std::size_t{1} << 20));
      }
      ++header;
      continue;
    }
    while (tokens >> tok) {
      if (coeffs.size() == expected) {
        throw FormatError(where() + ": more than " + std::to_string(expected) + " coefficients");
      }
      const std::uint64_t v = detail::parse_u64(tok, where());
      if (v >= out.modulus) {
        throw FormatError(where() + ": coefficient " + tok + " not reduced modulo " +
                          std::to_string(out.modulus));
      }
      coeffs.push_back(v);
    }
  }
  if (header < 2) {
    throw FormatError(name + ":" + std::to_string(lineno) + ": missing '" +
                      (header == 0 ? "p" : "n") + "' header line");
  }
  if (coeffs.size() != expected) {
    throw FormatError(name + ":" + std::to_string(lineno) + ": expected " +
                      std::to_string(expected) + " coefficients, found " +
                      std::to_string(coeffs.size()));
  }
  out.poly = Polynomial(std::move(coeffs));
  return out;
}

inline void write_poly(std::ostream& out, std::uint64_t modulus, const Polynomial& poly) {
  out << "p " << modulus << '\n' << "n " << poly.size() << '\n';
  for (std::size_t i = 0; i < poly.size(); ++i) out << (i ? " " : "") << poly[i];
  if (!poly.empty()) out << '\n';
}

}  // namespace tft
