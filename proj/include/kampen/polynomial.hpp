#pragma once

#include <vector>

#include "kampen/linalg.hpp"

namespace kampen {

// Univariate polynomial with rational coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder of a / b (b nonzero).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Monic greatest common divisor; zero only if both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial squarefree_part(const Polynomial& p);

// Sturm chain of p; counts distinct real roots in half-open intervals.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);
  int sign_changes(const Rational& x) const;
  // Distinct roots in (a, b]; requires a < b.
  int count(const Rational& a, const Rational& b) const;

 private:
  std::vector<Polynomial> chain_;
};

// Open interval (lo, hi) holding exactly one root of a squarefree polynomial
// that vanishes at neither endpoint.
struct RootInterval {
  Rational lo, hi;
};

// Upper bound on the absolute value of every root.
Rational root_bound(const Polynomial& p);

// Isolating intervals for the real roots of squarefree p inside (a, b),
// where p(a) and p(b) are nonzero; sorted left to right.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a,
                                        const Rational& b);

// Sign of q at the unique root of squarefree p in the interval. Refines the
// interval in place.
int sign_at_root(const Polynomial& q, const Polynomial& p, RootInterval& root);

}  // namespace kampen
