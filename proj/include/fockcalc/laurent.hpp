#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "fockcalc/partition.hpp"

namespace fockcalc {

using BigInt = boost::multiprecision::cpp_int;

enum class ExponentParity { even, odd, mixed, zero };

/// Integer Laurent polynomial in v, stored as exponent -> nonzero coefficient.
/// Equality is association equality; zero coefficients are never stored.
class Laurent {
public:
  Laurent() = default;
  Laurent(long long constant);  // NOLINT: implicit integers are convenient
  static Laurent monomial(int exponent, BigInt coefficient = 1);

  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int exponent) const;
  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator-() const;
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }

  /// The bar involution v -> v^-1.
  Laurent bar() const;

  BigInt eval_at_one() const;
  ExponentParity exponent_parity() const;

  /// Canonical string form: ascending exponents, " + "/" - " separators,
  /// e.g. "v^-2 + 2 + v^2", "1 - v", "0".
  std::string to_string() const;
  static Laurent parse(const std::string& text);

private:
  void set(int exponent, BigInt coefficient);
  std::map<int, BigInt> terms_;
};

/// [k] = v^(k-1) + v^(k-3) + ... + v^(1-k).
Laurent quantum_integer(int k);
/// [k]! = [1][2]...[k].
Laurent quantum_factorial(int k);

/// Exact division; throws InternalError if q does not divide p.
Laurent exact_divide(const Laurent& p, const Laurent& q);

/// The unique bar-invariant b with p - b supported on strictly positive
/// exponents: b = p_0 + sum_{k<0} p_k (v^k + v^-k).
Laurent symmetric_defect(const Laurent& p);

}  // namespace fockcalc
