#include "chainperm/rational_gf.hpp"

#include <cmath>

#include "chainperm/errors.hpp"

namespace chainperm {

namespace {

double evaluate(const Polynomial& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

constexpr int kMaxBisections = 200;
constexpr int kGridSteps = 4096;

}  // namespace

Polynomial make_polynomial(std::span<const std::int64_t> coefficients) {
  return Polynomial(coefficients.begin(), coefficients.end());
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RationalGF::RationalGF(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.empty()) throw InvalidArgument("denominator must be nonzero");
  if (denominator_[0] == -1) {
    for (auto& c : numerator_) c = -c;
    for (auto& c : denominator_) c = -c;
  }
  if (denominator_[0] != 1) throw InvalidArgument("denominator constant term must be 1 or -1");
}

std::vector<BigInt> gf_coefficients(const RationalGF& gf, std::size_t upto) {
  const Polynomial& num = gf.numerator();
  const Polynomial& den = gf.denominator();
  std::vector<BigInt> a(upto + 1, 0);
  for (std::size_t n = 0; n <= upto; ++n) {
    BigInt value = n < num.size() ? num[n] : BigInt(0);
    for (std::size_t j = 1; j < den.size() && j <= n; ++j) value -= den[j] * a[n - j];
    a[n] = value;
  }
  return a;
}

double growth_rate(const RationalGF& gf, double tol) {
  const Polynomial& den = gf.denominator();
  // den(0) = 1 > 0; scan for the first sign change in (0, 1).
  double lo = 0.0;
  double hi = -1.0;
  double prev = evaluate(den, 0.0);
  for (int i = 1; i <= kGridSteps; ++i) {
    const double x = static_cast<double>(i) / kGridSteps;
    const double v = evaluate(den, x);
    if (v == 0.0) return 1.0 / x;
    if ((v < 0.0) != (prev < 0.0)) {
      lo = static_cast<double>(i - 1) / kGridSteps;
      hi = x;
      break;
    }
    prev = v;
  }
  if (hi < 0.0) throw NoRootFound("denominator has no sign change in (0, 1)");
  const bool lo_negative = evaluate(den, lo) < 0.0;
  for (int it = 0; it < kMaxBisections && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((evaluate(den, mid) < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 1.0 / (0.5 * (lo + hi));
}

RationalGF strong_312_gf() {
  const std::int64_t num[] = {1, -1, -1, 1};
  const std::int64_t den[] = {1, -2, -1, 2, -1};
  return RationalGF(make_polynomial(num), make_polynomial(den));
}

RationalGF bound_312_321_gf() {
  const std::int64_t num[] = {1, -1, -1, 1};
  const std::int64_t den[] = {1, -2, -1, 1};
  return RationalGF(make_polynomial(num), make_polynomial(den));
}

RationalGF composition_gf(std::span<const unsigned> parts) {
  std::size_t degree = 0;
  for (unsigned d : parts) degree = std::max<std::size_t>(degree, d);
  Polynomial den(degree + 1, 0);
  den[0] = 1;
  for (unsigned d : parts) den[d] -= 1;
  return RationalGF({1}, std::move(den));
}

RationalGF ck_132_gf(unsigned k) {
  if (k == 0) throw InvalidArgument("k must be positive");
  std::vector<unsigned> divisors;
  for (unsigned d = 1; d <= k; ++d) {
    if (k % d == 0) divisors.push_back(d);
  }
  const RationalGF base = composition_gf(divisors);
  Polynomial den = multiply({1, -1}, base.denominator());
  return RationalGF({0, 1}, std::move(den));
}

}  // namespace chainperm
