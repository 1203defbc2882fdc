#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tft/field.hpp"

namespace tft {

/// Dense coefficient vector a_0..a_{len-1} over a prime field. Also serves
/// as the working buffer for every in-place transform.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t len) : coeffs_(len, 0) {}
  Polynomial(std::initializer_list<Elem> c) : coeffs_(c) {}
  explicit Polynomial(std::vector<Elem> c) : coeffs_(std::move(c)) {}

  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  [[nodiscard]] bool empty() const { return coeffs_.empty(); }
  Elem& operator[](std::size_t i) { return coeffs_[i]; }
  const Elem& operator[](std::size_t i) const { return coeffs_[i]; }

  [[nodiscard]] std::span<Elem> span() { return coeffs_; }
  [[nodiscard]] std::span<const Elem> span() const { return coeffs_; }
  [[nodiscard]] const std::vector<Elem>& coeffs() const { return coeffs_; }
  std::vector<Elem>& coeffs() { return coeffs_; }

  void resize(std::size_t len) { coeffs_.resize(len, 0); }
  void reserve(std::size_t len) { coeffs_.reserve(len); }

  /// Degree, with deg(0) = -1.
  [[nodiscard]] long degree() const {
    long d = static_cast<long>(coeffs_.size()) - 1;
    while (d >= 0 && coeffs_[static_cast<std::size_t>(d)] == 0) --d;
    return d;
  }

  /// Drops zero leading coefficients.
  void trim() { coeffs_.resize(static_cast<std::size_t>(degree() + 1)); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Elem> coeffs_;
};

}  // namespace tft
