#include "fockcalc/laurent.hpp"

#include <sstream>

namespace fockcalc {

Laurent::Laurent(long long constant) {
  if (constant != 0) terms_[0] = constant;
}

Laurent Laurent::monomial(int exponent, BigInt coefficient) {
  Laurent out;
  if (coefficient != 0) out.terms_[exponent] = std::move(coefficient);
  return out;
}

BigInt Laurent::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int Laurent::min_exponent() const {
  if (terms_.empty()) throw InternalError("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int Laurent::max_exponent() const {
  if (terms_.empty()) throw InternalError("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

void Laurent::set(int exponent, BigInt coefficient) {
  if (coefficient == 0)
    terms_.erase(exponent);
  else
    terms_[exponent] = std::move(coefficient);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) set(k, coefficient(k) + c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) set(k, coefficient(k) - c);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent out;
  for (const auto& [k, c] : terms_) out.terms_[k] = -c;
  return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.set(ka + kb, out.coefficient(ka + kb) + ca * cb);
  return out;
}

Laurent Laurent::bar() const {
  Laurent out;
  for (const auto& [k, c] : terms_) out.terms_[-k] = c;
  return out;
}

BigInt Laurent::eval_at_one() const {
  BigInt sum = 0;
  for (const auto& [k, c] : terms_) sum += c;
  return sum;
}

ExponentParity Laurent::exponent_parity() const {
  if (terms_.empty()) return ExponentParity::zero;
  bool even = false, odd = false;
  for (const auto& term : terms_) (term.first % 2 == 0 ? even : odd) = true;
  if (even && odd) return ExponentParity::mixed;
  return even ? ExponentParity::even : ExponentParity::odd;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag;
      out << "v";
      if (k != 1) out << "^" << k;
    }
  }
  return out.str();
}

Laurent Laurent::parse(const std::string& text) {
  Laurent out;
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip_space();
  if (i >= text.size()) throw DomainError("empty Laurent string");
  bool first = true;
  int sign = 1;
  while (i < text.size()) {
    if (!first) {
      skip_space();
      if (text[i] == '+') sign = 1;
      else if (text[i] == '-') sign = -1;
      else throw DomainError("malformed Laurent string: '" + text + "'");
      ++i;
      skip_space();
    } else {
      sign = 1;
      if (text[i] == '-') { sign = -1; ++i; }
      skip_space();
    }
    BigInt mag = 1;
    bool saw_digits = false;
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      digits += text[i++];
    if (!digits.empty()) {
      mag = BigInt(digits);
      saw_digits = true;
    }
    if (i < text.size() && text[i] == '*') ++i;
    int exponent = 0;
    if (i < text.size() && text[i] == 'v') {
      ++i;
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        int esign = 1;
        if (i < text.size() && text[i] == '-') { esign = -1; ++i; }
        std::string edigits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          edigits += text[i++];
        if (edigits.empty())
          throw DomainError("malformed Laurent string: '" + text + "'");
        exponent = esign * std::stoi(edigits);
      }
    } else if (!saw_digits) {
      throw DomainError("malformed Laurent string: '" + text + "'");
    }
    if (!(saw_digits && mag == 0))
      out.set(exponent, out.coefficient(exponent) + sign * mag);
    first = false;
    skip_space();
  }
  return out;
}

Laurent quantum_integer(int k) {
  if (k < 0) throw DomainError("quantum integer of a negative argument");
  Laurent out;
  for (int j = k - 1; j >= 1 - k; j -= 2) out += Laurent::monomial(j);
  return out;
}

Laurent quantum_factorial(int k) {
  if (k < 0) throw DomainError("quantum factorial of a negative argument");
  Laurent out = 1;
  for (int j = 2; j <= k; ++j) out = out * quantum_integer(j);
  return out;
}

Laurent exact_divide(const Laurent& p, const Laurent& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  if (p.is_zero()) return Laurent{};
  Laurent remainder = p;
  Laurent result;
  const int qtop = q.max_exponent();
  const BigInt qlead = q.coefficient(qtop);
  // an exact quotient has no exponent below this; crossing it means the
  // division does not come out even
  const int low_bound = p.min_exponent() - q.min_exponent();
  while (!remainder.is_zero()) {
    const int rtop = remainder.max_exponent();
    const BigInt rlead = remainder.coefficient(rtop);
    if (rlead % qlead != 0 || rtop - qtop < low_bound)
      throw InternalError("exact_divide: nonzero remainder");
    const Laurent term = Laurent::monomial(rtop - qtop, rlead / qlead);
    result += term;
    remainder -= term * q;
    if (!remainder.is_zero() && remainder.max_exponent() >= rtop)
      throw InternalError("exact_divide: nonzero remainder");
  }
  return result;
}

Laurent symmetric_defect(const Laurent& p) {
  Laurent out;
  for (const auto& [k, c] : p.terms()) {
    if (k > 0) continue;
    out += Laurent::monomial(k, c);
    if (k < 0) out += Laurent::monomial(-k, c);
  }
  return out;
}

}  // namespace fockcalc
