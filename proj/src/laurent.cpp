#include "qcpn/laurent.hpp"

#include <sstream>

namespace qcpn {

LaurentQ::LaurentQ(long constant) : LaurentQ(BigInt(constant)) {}

LaurentQ::LaurentQ(const BigInt& constant) { add_term(0, constant); }

LaurentQ LaurentQ::monomial(const BigInt& coefficient, int exponent) {
  LaurentQ result;
  result.add_term(exponent, coefficient);
  return result;
}

LaurentQ LaurentQ::q(int exponent) { return monomial(1, exponent); }

BigInt LaurentQ::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentQ::at_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

void LaurentQ::add_term(int exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& rhs) {
  LaurentQ product;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) product.add_term(ea + eb, ca * cb);
  *this = std::move(product);
  return *this;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ result = *this;
  for (auto& [e, c] : result.terms_) c = -c;
  return result;
}

std::string LaurentQ::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << "*";
    out << "q";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

}  // namespace qcpn
