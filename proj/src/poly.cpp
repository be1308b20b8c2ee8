#include "coxgenus/poly.hpp"

#include <stdexcept>

#include "coxgenus/classifier.hpp"
#include "coxgenus/errors.hpp"

namespace coxgenus {

IntPoly::IntPoly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::q_integer(int d) {
  return IntPoly(std::vector<Integer>(static_cast<std::size_t>(d), Integer(1)));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

PolyDivision divide_monic(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const Integer& lead = den.leading();
  if (lead != 1 && lead != -1)
    throw std::invalid_argument("divisor must have leading coefficient +-1");
  std::vector<Integer> rem = num.coefficients();
  const int dn = den.degree();
  const int qn = num.degree() - dn;
  std::vector<Integer> quot(qn >= 0 ? qn + 1 : 0);
  for (int k = qn; k >= 0; --k) {
    Integer c = rem[k + dn] * lead;  // lead is its own inverse
    quot[k] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dn; ++i) rem[k + i] -= c * den.coefficients()[i];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (den.degree() == 0) {
    // Constant divisor: coefficientwise.
    std::vector<Integer> out;
    for (const auto& c : num.coefficients()) {
      if (!mpz_divisible_p(c.get_mpz_t(), den.leading().get_mpz_t()))
        throw NotDivisible(num.to_string() + " is not divisible by " + den.to_string());
      out.push_back(c / den.leading());
    }
    return IntPoly(std::move(out));
  }
  if (den.leading() != 1 && den.leading() != -1) {
    throw std::invalid_argument("exact_div supports divisors with leading coefficient +-1");
  }
  auto [q, r] = divide_monic(num, den);
  if (!r.is_zero())
    throw NotDivisible(num.to_string() + " is not divisible by " + den.to_string());
  return q;
}

Integer eval_at(const IntPoly& p, const Integer& c) {
  Integer acc = 0;
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * c + *it;
  return acc;
}

IntPoly poincare_polynomial(const CoxeterSystem& sys, Subset J) {
  const auto cls = classify(sys, J);
  if (!cls.finite) throw NotFiniteType("W_" + sys.describe(J) + " is infinite");
  IntPoly out = 1;
  for (const auto& comp : cls.components) {
    for (int d : degrees_of(*comp.label)) out *= IntPoly::q_integer(d);
  }
  return out;
}

nlohmann::json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InputError("expected an integer");
}

nlohmann::json poly_to_json(const IntPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coefficients()) out.push_back(integer_to_json(c));
  return out;
}

IntPoly poly_from_json(const nlohmann::json& j) {
  std::vector<Integer> cs;
  for (const auto& c : j) cs.push_back(integer_from_json(c));
  return IntPoly(std::move(cs));
}

}  // namespace coxgenus
