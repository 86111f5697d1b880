#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace iecancel {

/// Univariate polynomial with exact 64-bit integer coefficients.
///
/// Coefficients are stored lowest degree first and kept canonical: the zero
/// polynomial has no coefficients, otherwise the leading coefficient is
/// nonzero. All arithmetic is checked and throws OverflowError instead of
/// wrapping.
class IntPolynomial {
 public:
  using Coefficient = std::int64_t;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coefficient> coeffs);
  IntPolynomial(std::initializer_list<Coefficient> coeffs);

  static IntPolynomial constant(Coefficient c);
  static IntPolynomial monomial(std::size_t degree, Coefficient c = 1);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^power; zero beyond the degree.
  [[nodiscard]] Coefficient coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : 0;
  }
  [[nodiscard]] const std::vector<Coefficient>& coeffs() const { return coeffs_; }

  IntPolynomial& operator+=(const IntPolynomial& other);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();

  std::vector<Coefficient> coeffs_;
};

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);

/// Multiplies every coefficient by sign, which must be +1 or -1.
IntPolynomial scale_signed(const IntPolynomial& a, int sign);

/// x^a * (1+x)^b, expanded with exact binomial coefficients.
IntPolynomial monomial_times_binomial(std::size_t a, std::size_t b);

/// Horner evaluation at k with overflow checks.
std::int64_t eval_at(const IntPolynomial& p, std::int64_t k);

/// Human form, highest degree first: "x^6 - 4x^4 + 3x^3 + x^2 - x".
std::string to_string(const IntPolynomial& p);
/// Machine form, lowest degree first: "[0, -1, 1, 3, -4, 0, 1]".
std::string to_coeff_list(const IntPolynomial& p);

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace iecancel
