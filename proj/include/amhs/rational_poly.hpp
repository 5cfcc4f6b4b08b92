#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "amhs/bigrational.hpp"

namespace amhs {

// Dense polynomial over Q; coefficient i multiplies x^i. The zero polynomial
// has no coefficients, and the leading stored coefficient is never zero.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(const BigRational& c) : coeffs_{c} { trim(); }  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  RationalPoly(T c) : RationalPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalPoly(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit RationalPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static RationalPoly x() { return RationalPoly{BigRational(0), BigRational(1)}; }

  static RationalPoly monomial(const BigRational& c, std::size_t degree) {
    std::vector<BigRational> v(degree + 1, BigRational(0));
    v[degree] = c;
    return RationalPoly(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }

  BigRational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

  BigRational evaluate(const BigRational& at) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  RationalPoly operator-() const {
    RationalPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  RationalPoly& operator+=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  RationalPoly& operator-=(const RationalPoly& o) { return *this += -o; }

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }

  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RationalPoly(std::move(out));
  }
  RationalPoly& operator*=(const RationalPoly& o) { return *this = *this * o; }

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + coeffs_[i].to_string() + ")";
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<BigRational> coeffs_;
};

}  // namespace amhs
