#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxgenus/coxeter_system.hpp"
#include "coxgenus/integer.hpp"
#include "coxgenus/subset.hpp"

namespace coxgenus {

// Polynomial in q with integer coefficients, constant term first, never
// carrying a trailing zero. The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c) : IntPoly(Integer(c)) {}  // NOLINT: constants convert implicitly
  IntPoly(const Integer& c);                // NOLINT
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<Integer> coeffs);

  // 1 + q + ... + q^{d-1}
  static IntPoly q_integer(int d);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(int i) const;
  const Integer& leading() const { return coeffs_.back(); }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  IntPoly operator-() const;

  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;  // "1 + 2q + q^2"

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

// Division by a divisor whose leading coefficient is +-1 (every Poincare
// polynomial is monic). Throws std::invalid_argument otherwise.
PolyDivision divide_monic(const IntPoly& num, const IntPoly& den);

// Quotient num/den; throws NotDivisible on a nonzero remainder and
// std::invalid_argument for den == 0.
IntPoly exact_div(const IntPoly& num, const IntPoly& den);

Integer eval_at(const IntPoly& p, const Integer& c);

// W_J(q) as the product over components of prod_i [d_i]_q.
// Throws NotFiniteType for infinite W_J.
IntPoly poincare_polynomial(const CoxeterSystem& sys, Subset J);

// Coefficient array; entries beyond 64 bits become decimal strings.
nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

}  // namespace coxgenus
