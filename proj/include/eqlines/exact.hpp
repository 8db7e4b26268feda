#pragma once

// Exact polynomial arithmetic over the integers and rationals, real-root
// isolation by Sturm sequences, and real algebraic numbers given by a
// defining polynomial plus an isolating interval.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "eqlines/graph.hpp"

namespace eqlines {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& text);  // "p/q" or "p"; throws std::invalid_argument
std::string to_string(const Rational& q);

/// Polynomial with integer coefficients, constant term first. The zero
/// polynomial has no coefficients; otherwise the last coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  const BigInt& leading() const { return coeffs_.back(); }
  bool monic() const { return !is_zero() && leading() == 1; }

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  int sign_at(const Rational& x) const;

  IntPolynomial derivative() const;

  // Divides out the coefficient gcd and makes the leading coefficient positive.
  IntPolynomial primitive() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial&) const = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

// det(xI - A) of the adjacency matrix, by the division-free Berkowitz method.
IntPolynomial char_poly(const Graph& g);

// Exact divisibility over Q. Throws std::invalid_argument when d is zero.
bool poly_divides(const IntPolynomial& d, const IntPolynomial& p);

// p / gcd(p, p'), as a primitive integer polynomial.
IntPolynomial squarefree_part(const IntPolynomial& p);

// gcd over Q, returned primitive with positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// (c y + d)^deg p((a y + b) / (c y + d)), made primitive.
IntPolynomial mobius_transform(const IntPolynomial& p, const BigInt& a, const BigInt& b,
                               const BigInt& c, const BigInt& d);

/// Sturm chain of a squarefree polynomial; counts distinct real roots exactly.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  // Number of distinct real roots in (a, b].
  std::size_t count(const Rational& a, const Rational& b) const;
  std::size_t count_above(const Rational& a) const;   // (a, +inf)
  std::size_t count_below(const Rational& b) const;   // (-inf, b]
  std::size_t count_real() const;

 private:
  std::size_t variations_at(const Rational& x) const;
  std::size_t variations_at_infinity(bool positive) const;
  std::vector<std::vector<Rational>> chain_;
};

// Cauchy bound: every root has absolute value below the returned value.
Rational root_bound(const IntPolynomial& p);

/// A real algebraic number: the unique root of `minpoly` inside (lo, hi).
class AlgebraicReal {
 public:
  // Reduces the polynomial to its primitive squarefree part and checks that
  // exactly one root lies strictly inside the interval and none on its ends.
  AlgebraicReal(const IntPolynomial& poly, Rational lo, Rational hi);

  static AlgebraicReal from_rational(const Rational& q);

  // Isolating intervals for every real root, ascending.
  static std::vector<AlgebraicReal> real_roots(const IntPolynomial& p);

  const IntPolynomial& minpoly() const { return minpoly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  // Non-empty when the number is known to be rational (minpoly of degree 1).
  bool is_rational() const { return minpoly_.degree() == 1; }
  Rational rational_value() const;  // throws unless is_rational()

  // Bisects until hi - lo <= width.
  AlgebraicReal refine(const Rational& width) const;

  std::strong_ordering compare(const Rational& q) const;

  struct Approximation {
    double value;
    double error_bound;
  };
  Approximation approximate() const;
  double to_double() const { return approximate().value; }

  bool operator==(const AlgebraicReal& other) const;

 private:
  AlgebraicReal() = default;
  void bisect();

  IntPolynomial minpoly_;
  Rational lo_;
  Rational hi_;
};

// lambda = (1 - alpha) / (2 alpha) and its inverse alpha = 1 / (2 lambda + 1).
Rational alpha_to_lambda(const Rational& alpha);
Rational lambda_to_alpha(const Rational& lambda);
AlgebraicReal alpha_to_lambda(const AlgebraicReal& alpha);
AlgebraicReal lambda_to_alpha(const AlgebraicReal& lambda);

// Positive algebraic integer whose conjugates are all real with absolute value
// at most lambda. Throws std::invalid_argument for a non-monic minpoly.
bool is_weak_perron(const AlgebraicReal& lambda);
// Same, with conjugates strictly smaller in absolute value.
bool is_strict_perron(const AlgebraicReal& lambda);

// Number of distinct roots of p strictly greater than lambda.
std::size_t roots_above(const IntPolynomial& p, const AlgebraicReal& lambda);

// {"minpoly": ["c0", ...], "lo": "p/q", "hi": "p/q"}
nlohmann::json algebraic_to_json(const AlgebraicReal& x);
AlgebraicReal algebraic_from_json(const nlohmann::json& j);

}  // namespace eqlines
