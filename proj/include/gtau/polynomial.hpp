#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gtau {

/// Dense polynomial with ascending coefficients c_0 + c_1 t + ... + c_d t^d.
/// Trailing zero coefficients are trimmed, so a non-zero polynomial always has
/// a non-zero leading coefficient; the zero polynomial has no coefficients and
/// degree -1.
template <class T>
class BasicPolynomial {
 public:
  BasicPolynomial() = default;

  explicit BasicPolynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static BasicPolynomial constant(const T& c) { return BasicPolynomial(std::vector<T>{c}); }

  const std::vector<T>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const T& leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  /// Coefficient of t^k; zero beyond the degree.
  T operator[](int k) const {
    if (k < 0 || k > degree()) return T(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  template <class U>
  U evaluate(const U& t) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + U(*it);
    return acc;
  }

  /// Multiplication by t^k.
  BasicPolynomial shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<T> out(static_cast<std::size_t>(k), T(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return BasicPolynomial(std::move(out));
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    std::vector<T> out(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return BasicPolynomial(std::move(out));
  }

  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    std::vector<T> out(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return BasicPolynomial(std::move(out));
  }

  friend BasicPolynomial operator*(const T& s, const BasicPolynomial& a) {
    std::vector<T> out(a.coeffs_);
    for (auto& c : out) c *= s;
    return BasicPolynomial(std::move(out));
  }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BasicPolynomial(std::move(out));
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

}  // namespace gtau
