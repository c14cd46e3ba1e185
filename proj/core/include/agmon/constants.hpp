#pragma once

// Exact constants of the lattice Agmon-Kolmogorov inequality
//
//   ||f||_inf <= mu(p, d) * ||grad_D f||^(p / 2^d) * ||f||^(1 - p / 2^d),
//   mu(p, d)  = (kappa(p, d) / d^(p/2))^(1 / 2^d),
//   kappa(p, d) = 2^(d * 2^(d-1) - p),   1 <= p <= 2^(d-1).
//
// Every constant is a power of two times a power of d, so values are carried
// as exact rational exponents. The floating-point `approx` overflows to
// +infinity long before the exponents stop being exact.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace agmon {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The two halves of the norm expansion: terms that carry D_1 and terms that
/// do not.
enum class Branch { Differenced, Plain };

[[nodiscard]] const char* to_string(Branch branch);

struct ConstantSpec {
  int d = 1;
  std::int64_t p = 1;
};

/// Throws DomainError unless d >= 1 and 1 <= p <= 2^(d-1).
void validate(const ConstantSpec& spec);

/// 2^pow2_exponent * d^d_log_coeff.
struct ConstantValue {
  Rational pow2_exponent;
  Rational d_log_coeff;
  double approx = 0.0;

  /// Human-readable exact form, e.g. "2^(1/4)" or "2^(5/4) * 3^(-1/16)".
  /// Collapses into a single power of two when d is a power of two.
  [[nodiscard]] std::string exact_form(int d) const;
};

/// Builds a ConstantValue and evaluates exp2(e + c * log2(d)).
[[nodiscard]] ConstantValue make_constant(Rational pow2_exponent, Rational d_log_coeff, int d);

[[nodiscard]] BigInt binomial(std::int64_t n, std::int64_t k);
[[nodiscard]] BigInt pow2(std::int64_t exponent);

/// log2 of kappa(p, d), i.e. d * 2^(d-1) - p.
[[nodiscard]] BigInt kappa_log2(const ConstantSpec& spec);

[[nodiscard]] ConstantValue mu(const ConstantSpec& spec);

/// Number of expansion terms of operator order i in the given branch:
/// C(d-1, i-1) for Differenced (1 <= i <= d), C(d-1, i) for Plain
/// (0 <= i <= d-1).
[[nodiscard]] BigInt omega_count(int d, int order, Branch branch);

/// Smallest admissible order in a branch (1 or 0) and the largest (d or d-1).
[[nodiscard]] int min_order(Branch branch);
[[nodiscard]] int max_order(int d, Branch branch);

/// Product over the Differenced branch of the reduction factors 2^(order-1).
[[nodiscard]] ConstantValue rho1(int d);
/// Product over the Plain branch of the reduction factors 2^order.
[[nodiscard]] ConstantValue rho2(int d);
/// kappa at p = 2^(d-1) assembled as rho1 * rho2 (product form).
[[nodiscard]] ConstantValue kappa_min(int d);

/// n * 2^(n-1) == sum_k k * C(n, k), evaluated in exact integers.
[[nodiscard]] bool binomial_identity_check(std::int64_t n);

/// "a/b" or "a" when the denominator is one.
[[nodiscard]] std::string to_string(const Rational& value);

}  // namespace agmon
