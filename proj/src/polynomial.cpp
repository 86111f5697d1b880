#include "iecancel/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "iecancel/errors.hpp"

namespace iecancel {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in polynomial addition");
  }
  return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in polynomial multiplication");
  }
  return out;
}

}  // namespace checked

IntPolynomial::IntPolynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<Coefficient> coeffs) : coeffs_(coeffs) {
  normalize();
}

IntPolynomial IntPolynomial::constant(Coefficient c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, Coefficient c) {
  std::vector<Coefficient> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = checked::add(coeffs_[i], other.coeffs_[i]);
  }
  normalize();
  return *this;
}

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out = a;
  out += b;
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) { return add(a, b); }

IntPolynomial scale_signed(const IntPolynomial& a, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("scale_signed: sign must be +1 or -1");
  if (sign == 1) return a;
  std::vector<IntPolynomial::Coefficient> v = a.coeffs();
  for (auto& c : v) c = checked::mul(c, -1);
  return IntPolynomial(std::move(v));
}

IntPolynomial monomial_times_binomial(std::size_t a, std::size_t b) {
  std::vector<IntPolynomial::Coefficient> v(a + b + 1, 0);
  // Row b of Pascal's triangle, built in place.
  std::vector<IntPolynomial::Coefficient> row(b + 1, 0);
  row[0] = 1;
  for (std::size_t r = 1; r <= b; ++r) {
    for (std::size_t j = r; j >= 1; --j) row[j] = checked::add(row[j], row[j - 1]);
  }
  std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(a));
  return IntPolynomial(std::move(v));
}

std::int64_t eval_at(const IntPolynomial& p, std::int64_t k) {
  std::int64_t acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = checked::add(checked::mul(acc, k), *it);
  }
  return acc;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const std::int64_t c = p.coeff(static_cast<std::size_t>(d));
    if (c == 0) continue;
    const bool negative = c < 0;
    // Magnitude as unsigned to survive INT64_MIN.
    const std::uint64_t mag = negative ? std::uint64_t{0} - static_cast<std::uint64_t>(c)
                                       : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'x';
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

std::string to_coeff_list(const IntPolynomial& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ", ";
    os << p.coeffs()[i];
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }

}  // namespace iecancel
