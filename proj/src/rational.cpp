#include "tautcalc/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace tautcalc {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\n' || s.back() == '\r')) s.pop_back();
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  const auto slash = s.find('/');
  auto check_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(num.begin());
  if (!check_int(num) || !check_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  return Rational(n, d);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("Rational: zero to a negative power");
    return Rational(1) / pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::size_t Rational::hash() const {
  const std::size_t h1 = mpz_get_ui(q_.get_num_mpz_t()) * (sgn(q_) < 0 ? 31 : 17);
  const std::size_t h2 = mpz_get_ui(q_.get_den_mpz_t());
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(long top, long k) {
  if (k < 0) return Rational(0);
  if (top >= 0) {
    if (k > top) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
    return Rational(b);
  }
  mpz_class num = 1;
  for (long i = 0; i < k; ++i) num *= (top - i);
  return Rational(num) / factorial(k);
}

mpz_class double_factorial_odd(long k) {
  // (2k-1)!!
  if (k < 0) throw std::domain_error("double factorial of a negative odd number below -1");
  mpz_class r = 1;
  for (long j = 2 * k - 1; j > 1; j -= 2) r *= j;
  return r;
}

}  // namespace tautcalc
