#ifndef NZFLOW_POLYNOMIAL_HPP
#define NZFLOW_POLYNOMIAL_HPP

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace nzflow {

namespace checked {

template <std::integral T>
T add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in addition");
  return r;
}

template <std::integral T>
T mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in multiplication");
  return r;
}

template <std::integral T>
T pow(T base, std::size_t exp) {
  T r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

}  // namespace checked

/// Exact polynomial in k. coefficients()[i] multiplies k^i; the highest
/// stored coefficient is nonzero, so the zero polynomial is empty.
template <std::signed_integral Int>
class BasicPolynomial {
 public:
  using coefficient_type = Int;

  BasicPolynomial() = default;
  BasicPolynomial(std::initializer_list<Int> ascending) : coeffs_(ascending) { normalize(); }
  explicit BasicPolynomial(std::vector<Int> ascending) : coeffs_(std::move(ascending)) { normalize(); }

  /// From signless coefficients a_0..a_D of sum (-1)^i a_i k^{D-i}.
  static BasicPolynomial from_signless(const std::vector<Int>& signless) {
    const auto d = signless.size();
    std::vector<Int> c(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      c[d - 1 - i] = (i % 2 == 0) ? signless[i] : checked::mul<Int>(signless[i], -1);
    }
    return BasicPolynomial(std::move(c));
  }

  const std::vector<Int>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Int coefficient(std::size_t power) const noexcept { return power < coeffs_.size() ? coeffs_[power] : Int{0}; }

  BasicPolynomial& add_term(int sign, std::size_t power) {
    return add_term_scaled(sign >= 0 ? Int{1} : Int{-1}, power);
  }

  BasicPolynomial& add_term_scaled(Int amount, std::size_t power) {
    if (coeffs_.size() <= power) coeffs_.resize(power + 1, 0);
    coeffs_[power] = checked::add(coeffs_[power], amount);
    normalize();
    return *this;
  }

  Int eval(Int k) const {
    if (k < 0) throw InputError("polynomials are evaluated at k >= 0 only");
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked::add(checked::mul(acc, k), *it);
    return acc;
  }

  /// (a_0, ..., a_D) with p = sum (-1)^i a_i k^{D-i}.
  std::vector<Int> signless_coefficients(std::size_t top_degree) const {
    if (degree() > static_cast<long>(top_degree)) {
      throw InputError("degree " + std::to_string(degree()) + " exceeds top degree " + std::to_string(top_degree));
    }
    std::vector<Int> a(top_degree + 1, 0);
    for (std::size_t i = 0; i <= top_degree; ++i) {
      const Int c = coefficient(top_degree - i);
      a[i] = (i % 2 == 0) ? c : checked::mul<Int>(c, -1);
    }
    return a;
  }

  /// Descending powers, e.g. "k^3 - 6k^2 + 11k - 6"; zero prints "0".
  std::string format(char variable = 'k') const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t p = coeffs_.size(); p-- > 0;) {
      const Int c = coeffs_[p];
      if (c == 0) continue;
      const bool negative = c < 0;
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      const auto mag = negative ? -static_cast<__int128>(c) : static_cast<__int128>(c);
      if (mag != 1 || p == 0) out += to_string(mag);
      if (p >= 1) out += variable;
      if (p >= 2) out += '^' + std::to_string(p);
    }
    return out;
  }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

 private:
  static std::string to_string(__int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return s;
  }

  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

using IntPolynomial = BasicPolynomial<std::int64_t>;

inline IntPolynomial add_term(IntPolynomial p, int sign, std::size_t power) {
  p.add_term(sign, power);
  return p;
}

inline std::int64_t eval(const IntPolynomial& p, std::int64_t k) { return p.eval(k); }

inline std::vector<std::int64_t> signless_coefficients(const IntPolynomial& p, std::size_t top_degree) {
  return p.signless_coefficients(top_degree);
}

inline std::string format(const IntPolynomial& p) { return p.format(); }

}  // namespace nzflow

#endif  // NZFLOW_POLYNOMIAL_HPP
