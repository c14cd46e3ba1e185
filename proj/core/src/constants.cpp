#include "agmon/constants.hpp"

#include <bit>
#include <cmath>

#include "agmon/lattice.hpp"

namespace agmon {
namespace {

void require_dimension(int d) {
  if (d < 1) throw DomainError("dimension d = " + std::to_string(d) + " must be >= 1");
}

std::string power_term(const std::string& base, const Rational& exponent) {
  if (boost::multiprecision::denominator(exponent) == 1) {
    return base + "^" + to_string(exponent);
  }
  return base + "^(" + to_string(exponent) + ")";
}

// Sum over one branch of (order - shift) * |orders of that size|.
BigInt weighted_order_sum(int d, Branch branch, int shift) {
  BigInt total = 0;
  for (int i = min_order(branch); i <= max_order(d, branch); ++i) {
    total += BigInt(i - shift) * omega_count(d, i, branch);
  }
  return total;
}

}  // namespace

const char* to_string(Branch branch) {
  return branch == Branch::Differenced ? "differenced" : "plain";
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

void validate(const ConstantSpec& spec) {
  require_dimension(spec.d);
  if (spec.p < 1 || BigInt(spec.p) > pow2(spec.d - 1)) {
    throw DomainError("p = " + std::to_string(spec.p) + " out of range 1..2^(d-1) for d = " +
                      std::to_string(spec.d));
  }
}

std::string ConstantValue::exact_form(int d) const {
  if (d >= 1 && std::has_single_bit(static_cast<unsigned>(d))) {
    const Rational total = pow2_exponent + d_log_coeff * std::countr_zero(static_cast<unsigned>(d));
    if (total == 0) return "1";
    return power_term("2", total);
  }
  std::string out = pow2_exponent == 0 ? std::string{} : power_term("2", pow2_exponent);
  if (d_log_coeff != 0) {
    if (!out.empty()) out += " * ";
    out += power_term(std::to_string(d), d_log_coeff);
  }
  return out.empty() ? "1" : out;
}

ConstantValue make_constant(Rational pow2_exponent, Rational d_log_coeff, int d) {
  require_dimension(d);
  const double e = pow2_exponent.convert_to<double>();
  const double c = d_log_coeff.convert_to<double>();
  const double approx = std::exp2(e + c * std::log2(static_cast<double>(d)));
  return {std::move(pow2_exponent), std::move(d_log_coeff), approx};
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

BigInt pow2(std::int64_t exponent) {
  if (exponent < 0) throw DomainError("negative power of two in integer context");
  BigInt one = 1;
  return one << static_cast<unsigned>(exponent);
}

BigInt kappa_log2(const ConstantSpec& spec) {
  validate(spec);
  return BigInt(spec.d) * pow2(spec.d - 1) - spec.p;
}

ConstantValue mu(const ConstantSpec& spec) {
  const BigInt k = kappa_log2(spec);
  const BigInt levels = pow2(spec.d);
  Rational e(k, levels);
  Rational c(BigInt(-spec.p), levels * 2);
  return make_constant(std::move(e), std::move(c), spec.d);
}

int min_order(Branch branch) { return branch == Branch::Differenced ? 1 : 0; }

int max_order(int d, Branch branch) { return branch == Branch::Differenced ? d : d - 1; }

BigInt omega_count(int d, int order, Branch branch) {
  require_dimension(d);
  if (order < min_order(branch) || order > max_order(d, branch)) {
    throw DomainError("order " + std::to_string(order) + " out of range " +
                      std::to_string(min_order(branch)) + ".." +
                      std::to_string(max_order(d, branch)) + " for the " + to_string(branch) +
                      " branch at d = " + std::to_string(d));
  }
  return branch == Branch::Differenced ? binomial(d - 1, order - 1) : binomial(d - 1, order);
}

ConstantValue rho1(int d) {
  require_dimension(d);
  return make_constant(Rational(weighted_order_sum(d, Branch::Differenced, 1)), Rational(0), d);
}

ConstantValue rho2(int d) {
  require_dimension(d);
  return make_constant(Rational(weighted_order_sum(d, Branch::Plain, 0)), Rational(0), d);
}

ConstantValue kappa_min(int d) {
  const ConstantValue a = rho1(d);
  const ConstantValue b = rho2(d);
  return make_constant(a.pow2_exponent + b.pow2_exponent, Rational(0), d);
}

bool binomial_identity_check(std::int64_t n) {
  if (n < 1) throw DomainError("binomial identity needs n >= 1");
  BigInt sum = 0;
  for (std::int64_t k = 0; k <= n; ++k) sum += BigInt(k) * binomial(n, k);
  return sum == BigInt(n) * pow2(n - 1);
}

}  // namespace agmon
