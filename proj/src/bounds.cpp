#include "hdecomp/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace hdecomp {

using Rational = boost::multiprecision::cpp_rational;

BigInt binomial_signed(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0) return 0;
  return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
}

std::int64_t n_zero(std::int64_t k, std::int64_t r) { return k * r * (k + r - 2) + 2 * r - 1; }

FranklBound frankl_bound(std::int64_t n, std::int64_t r, std::int64_t k) {
  return FranklBound{binomial_signed(n, r) - binomial_signed(n - k, r), n >= (2 * k + 1) * r - k};
}

bool residual_check(const Hypergraph& g, const PackingCertificate& cert, std::int64_t k) {
  if (k < 1) throw InvalidArgument("k must be positive");
  if (matching_number(cert.leftover) > static_cast<std::size_t>(k - 1)) return false;
  const std::int64_t n = g.n();
  const std::int64_t r = g.r();
  if (n >= (2 * k - 1) * r - (k - 1)) {
    return BigInt(cert.leftover.size()) <= binomial_signed(n, r) - binomial_signed(n - k + 1, r);
  }
  return true;
}

BigInt lower_bound_e(std::int64_t n, std::int64_t r, std::int64_t k) {
  const BigInt total = binomial_signed(n, r);
  return total - (k - 1) * (total - binomial_signed(n - k + 1, r));
}

bool degree_condition_inequality(std::int64_t n, std::int64_t r, std::int64_t k) {
  return k * binomial_signed(n - r, r) + (k - 1) * binomial_signed(n - k + 1, r) >=
         (2 * k - 2) * binomial_signed(n, r);
}

bool ratio_inequality_check(std::int64_t n, std::int64_t r, std::int64_t t) {
  if (t < 0 || r < t || n < r + t) throw InvalidArgument("ratio inequality needs n >= r + t and r >= t >= 0");
  const Rational lhs(binomial_signed(n - t, r), binomial_signed(n, r));
  const Rational base(BigInt(n - t - r + 1), BigInt(n - r + 1));
  Rational middle = 1;
  for (std::int64_t j = 0; j < r; ++j) middle *= base;
  const Rational rhs = Rational(1) - Rational(BigInt(r * t), BigInt(n - r + 1));
  return lhs >= middle && middle >= rhs;
}

}  // namespace hdecomp
