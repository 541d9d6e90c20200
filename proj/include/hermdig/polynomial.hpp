#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hermdig/gaussian_int.hpp"

namespace hermdig {

/// Dense polynomial over Z, coefficients stored in ascending degree.
/// Always normalized: no trailing zero coefficients, so the zero
/// polynomial has an empty coefficient vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> ascending);
  Polynomial(std::initializer_list<long long> ascending);

  static Polynomial monomial(int k, BigInt c = 1);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  /// Coefficient of t^k, zero beyond the degree.
  BigInt operator[](int k) const;
  const BigInt& leading() const { return c_.back(); }

  /// Coefficients as int64; throws std::overflow_error if any does not fit.
  std::vector<std::int64_t> to_int64() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const BigInt& k, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;
  /// Orders by degree, then by coefficients from the top down.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

  /// "t^3 - 3t + 2"
  std::string to_string(char var = 't') const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

using CharPoly = Polynomial;

struct Rational {
  BigInt num{0};
  BigInt den{1};  // > 0
};

Polynomial derivative(const Polynomial& p);
/// p(-t)
Polynomial reflect(const Polynomial& p);
/// Largest z with t^z | p (0 for the zero polynomial).
int zero_multiplicity(const Polynomial& p);
/// p / t^z
Polynomial shift_down(const Polynomial& p, int z);
/// Even polynomial p(t) as a polynomial in u = t^2; throws if p has odd terms.
Polynomial even_part_in_square(const Polynomial& p);

/// Sign of p at num/den (den > 0).
int sign_at(const Polynomial& p, const Rational& x);

BigInt content(const Polynomial& p);
/// Content removed and leading coefficient made positive.
Polynomial primitive_part(const Polynomial& p);
/// lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);
/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// a / b, which must be an exact quotient in Z[t]; throws std::domain_error otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Integer N with every real root of p in [-N, N].
BigInt root_bound(const Polynomial& p);

bool is_squarefree(const Polynomial& p);
/// Squarefree part p / gcd(p, p'), primitive.
Polynomial squarefree_part(const Polynomial& p);

/// Number of distinct real roots in (lo, hi] (Sturm).
int count_distinct_roots(const Polynomial& p, const Rational& lo, const Rational& hi);
/// Number of real roots in (lo, hi] counted with multiplicity.
int count_roots(const Polynomial& p, const Rational& lo, const Rational& hi);
int count_positive_roots(const Polynomial& p);
int count_negative_roots(const Polynomial& p);
/// True iff p has only real roots (counted with multiplicity).
bool all_roots_real(const Polynomial& p);

/// Irreducibility over Q of a monic polynomial of positive degree, by
/// Kronecker's method. Exponential in the degree; meant for degree <= 10.
/// Throws std::invalid_argument for non-monic input.
bool is_irreducible(const Polynomial& p);

}  // namespace hermdig
