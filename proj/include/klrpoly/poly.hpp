#pragma once

/**
 * @file poly.hpp
 * @brief Exact integer polynomials in q and Laurent polynomials in t.
 *
 * Coefficients are 64-bit integers with checked arithmetic: any operation
 * that would overflow throws OverflowError instead of wrapping. Both types
 * keep a canonical dense form (no leading/trailing zero coefficients, the
 * zero polynomial has no coefficients) so equality is structural.
 */

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace klrpoly {

using Coefficient = std::int64_t;

class IntPolynomial {
public:
  IntPolynomial() = default;
  /// coefficients[d] is the coefficient of q^d.
  explicit IntPolynomial(std::vector<Coefficient> coefficients);
  IntPolynomial(std::initializer_list<Coefficient> coefficients);

  static IntPolynomial constant(Coefficient c);
  /// c * q^degree
  static IntPolynomial monomial(int degree, Coefficient c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coefficient coefficient(int d) const;
  std::span<const Coefficient> coefficients() const { return coeffs_; }

  /// Exact value at q = x (checked).
  Coefficient evaluate(Coefficient x) const;

  IntPolynomial &operator+=(const IntPolynomial &o);
  IntPolynomial &operator-=(const IntPolynomial &o);
  IntPolynomial &operator*=(const IntPolynomial &o);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial &b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial &b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b);
  friend IntPolynomial operator-(const IntPolynomial &a);

  bool operator==(const IntPolynomial &) const = default;

private:
  void trim();
  std::vector<Coefficient> coeffs_;
};

/// Descending degree with explicit signs: "q^3+q", "-q^5", "q^3-2q^2+2q-1", "0".
std::string to_string(const IntPolynomial &p);

/// Laurent polynomial in t: sum of c_d t^d for d >= min_degree.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int min_degree, std::vector<Coefficient> coefficients);

  static LaurentPolynomial monomial(int degree, Coefficient c = 1);
  static LaurentPolynomial from_polynomial(const IntPolynomial &p);

  bool is_zero() const { return coeffs_.empty(); }
  /// Meaningless for the zero polynomial.
  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(coeffs_.size()) - 1; }
  Coefficient coefficient(int d) const;
  std::span<const Coefficient> coefficients() const { return coeffs_; }

  LaurentPolynomial &operator+=(const LaurentPolynomial &o);
  LaurentPolynomial &operator-=(const LaurentPolynomial &o);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b);
  friend LaurentPolynomial operator-(const LaurentPolynomial &a);

  bool operator==(const LaurentPolynomial &) const = default;

private:
  void trim();
  int min_degree_ = 0;
  std::vector<Coefficient> coeffs_;
};

/// "t^2-1+t^-2"-style rendering, descending degree.
std::string to_string(const LaurentPolynomial &p);

/**
 * Computes q^{d/2} * p(q^{1/2} - q^{-1/2}) as a polynomial in q.
 *
 * Works in t = q^{1/2}: forms t^d * p(t - t^{-1}), requires every surviving
 * exponent to be even and non-negative, then maps t^{2e} to q^e. Throws
 * InvariantViolation when an odd (or negative) exponent survives, which
 * means the parities of p and d do not match.
 */
IntPolynomial substitute_shift(const IntPolynomial &p, int d);

namespace checked {
Coefficient add(Coefficient a, Coefficient b);
Coefficient sub(Coefficient a, Coefficient b);
Coefficient mul(Coefficient a, Coefficient b);
} // namespace checked

} // namespace klrpoly
