#include "tautcalc/taut_poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "tautcalc/special.hpp"

namespace tautcalc {

int TautMonomial::kappa_degree() const {
  int d = 0;
  for (const auto& [m, e] : kappa) d += m * e;
  return d;
}

int TautMonomial::psi_degree() const {
  int d = 0;
  for (int x : psi) d += x;
  return d;
}

std::vector<std::pair<int, int>> TautMonomial::merge_kappa(const std::vector<std::pair<int, int>>& a,
                                                           const std::vector<std::pair<int, int>>& b) {
  std::vector<std::pair<int, int>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

TautPolynomial::TautPolynomial(int n_points, int trunc_degree) : n_points_(n_points), trunc_(trunc_degree) {
  if (n_points < 0 || trunc_degree < 0)
    throw std::invalid_argument("TautPolynomial: negative point count or truncation degree");
}

TautPolynomial TautPolynomial::constant(int n_points, int trunc_degree, const Rational& c) {
  TautPolynomial p(n_points, trunc_degree);
  p.add_term(TautMonomial{{}, std::vector<int>(n_points, 0)}, c);
  return p;
}

TautPolynomial TautPolynomial::kappa(int n_points, int trunc_degree, int m, int power) {
  if (m < 1) throw std::invalid_argument("TautPolynomial::kappa: index must be >= 1");
  TautPolynomial p(n_points, trunc_degree);
  TautMonomial mono{{}, std::vector<int>(n_points, 0)};
  if (power > 0) mono.kappa.emplace_back(m, power);
  p.add_term(mono, Rational(1));
  return p;
}

TautPolynomial TautPolynomial::psi(int n_points, int trunc_degree, int i, int power) {
  if (i < 1 || i > n_points) throw std::invalid_argument("TautPolynomial::psi: point index out of range");
  TautPolynomial p(n_points, trunc_degree);
  TautMonomial mono{{}, std::vector<int>(n_points, 0)};
  mono.psi[i - 1] = power;
  p.add_term(mono, Rational(1));
  return p;
}

TautPolynomial TautPolynomial::monomial(int n_points, int trunc_degree, const TautMonomial& mono,
                                        const Rational& c) {
  TautPolynomial p(n_points, trunc_degree);
  p.add_term(mono, c);
  return p;
}

void TautPolynomial::add_term(const TautMonomial& mono, const Rational& c) {
  if (static_cast<int>(mono.psi.size()) != n_points_)
    throw std::invalid_argument("TautPolynomial: monomial has the wrong number of points");
  if (c.is_zero() || mono.degree() > trunc_) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational TautPolynomial::coefficient(const TautMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

TautPolynomial TautPolynomial::homogeneous_part(int k) const {
  TautPolynomial p(n_points_, trunc_);
  for (const auto& [mono, c] : terms_)
    if (mono.degree() == k) p.terms_.emplace(mono, c);
  return p;
}

TautPolynomial TautPolynomial::retruncated(int trunc_degree) const {
  TautPolynomial p(n_points_, trunc_degree);
  for (const auto& [mono, c] : terms_)
    if (mono.degree() <= trunc_degree) p.terms_.emplace(mono, c);
  return p;
}

void TautPolynomial::check_compatible(const TautPolynomial& o) const {
  if (n_points_ != o.n_points_ || trunc_ != o.trunc_)
    throw std::invalid_argument("TautPolynomial: mismatched point count or truncation degree");
}

TautPolynomial& TautPolynomial::operator+=(const TautPolynomial& o) {
  check_compatible(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

TautPolynomial& TautPolynomial::operator-=(const TautPolynomial& o) {
  check_compatible(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

TautPolynomial& TautPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, v] : terms_) v *= c;
  return *this;
}

TautPolynomial operator*(const TautPolynomial& a, const TautPolynomial& b) {
  a.check_compatible(b);
  TautPolynomial out(a.n_points_, a.trunc_);
  for (const auto& [ma, ca] : a.terms_) {
    const int da = ma.degree();
    for (const auto& [mb, cb] : b.terms_) {
      if (da + mb.degree() > a.trunc_) continue;
      TautMonomial m;
      m.kappa = TautMonomial::merge_kappa(ma.kappa, mb.kappa);
      m.psi = ma.psi;
      for (std::size_t i = 0; i < m.psi.size(); ++i) m.psi[i] += mb.psi[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

namespace {

std::string render_monomial(const TautMonomial& mono) {
  std::string s;
  auto append = [&s](const std::string& name, int e) {
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  };
  for (const auto& [m, e] : mono.kappa) append("k" + std::to_string(m), e);
  for (std::size_t i = 0; i < mono.psi.size(); ++i)
    if (mono.psi[i] > 0) append("p" + std::to_string(i + 1), mono.psi[i]);
  return s;
}

}  // namespace

std::string TautPolynomial::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    const std::string body = render_monomial(mono);
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    std::string term;
    if (body.empty()) {
      term = mag.str();
    } else if (mag == Rational(1)) {
      term = body;
    } else {
      term = mag.str() + "*" + body;
    }
    if (first) {
      out = (negative ? "-" : "") + term;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

TautPolynomial TautPolynomial::parse(std::string_view text, int n_points, int trunc_degree) {
  TautPolynomial p(n_points, trunc_degree);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty() || s == "0") return p;

  // Split into signed terms at top-level '+'/'-' (a '-' right after '^' or '*'
  // is not a separator).
  std::vector<std::pair<bool, std::string>> terms;
  std::string cur;
  bool negative = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    const bool sep = (ch == '+' || ch == '-') && (i == 0 || (s[i - 1] != '^' && s[i - 1] != '*'));
    if (sep) {
      if (!cur.empty()) terms.emplace_back(negative, cur);
      else if (i != 0) throw std::invalid_argument("TautPolynomial::parse: empty term in '" + std::string(text) + "'");
      cur.clear();
      negative = (ch == '-');
    } else {
      cur += ch;
    }
  }
  if (cur.empty()) throw std::invalid_argument("TautPolynomial::parse: trailing sign in '" + std::string(text) + "'");
  terms.emplace_back(negative, cur);

  auto parse_int = [&text](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("TautPolynomial::parse: malformed '" + std::string(text) + "'");
    for (char ch : t)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("TautPolynomial::parse: malformed '" + std::string(text) + "'");
    return std::stoi(t);
  };

  for (const auto& [neg, body] : terms) {
    Rational coef(neg ? -1 : 1);
    TautMonomial mono{{}, std::vector<int>(n_points, 0)};
    std::stringstream ss(body);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
      if (factor.empty()) throw std::invalid_argument("TautPolynomial::parse: empty factor");
      const char head = factor[0];
      if (head == 'k' || head == 'p') {
        const auto caret = factor.find('^');
        const int idx = parse_int(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        const int e = caret == std::string::npos ? 1 : parse_int(factor.substr(caret + 1));
        if (head == 'k') {
          if (idx < 1) throw std::invalid_argument("TautPolynomial::parse: kappa index must be >= 1");
          mono.kappa = TautMonomial::merge_kappa(mono.kappa, {{idx, e}});
        } else {
          if (idx < 1 || idx > n_points)
            throw std::invalid_argument("TautPolynomial::parse: psi index out of range");
          mono.psi[idx - 1] += e;
        }
      } else {
        coef *= Rational::parse(factor);
      }
    }
    std::erase_if(mono.kappa, [](const auto& pr) { return pr.second == 0; });
    p.add_term(mono, coef);
  }
  return p;
}

TautPolynomial tp_add(const TautPolynomial& a, const TautPolynomial& b) { return a + b; }
TautPolynomial tp_mul(const TautPolynomial& a, const TautPolynomial& b) { return a * b; }
TautPolynomial tp_scale(const TautPolynomial& a, const Rational& c) { return a * c; }

TautPolynomial exp_kappa_series(const std::map<int, Rational>& coeffs, int n_points, int trunc_degree) {
  TautPolynomial s(n_points, trunc_degree);
  for (const auto& [m, c] : coeffs) {
    if (m < 1) throw std::invalid_argument("exp_kappa_series: kappa index must be >= 1");
    if (m <= trunc_degree) s += TautPolynomial::kappa(n_points, trunc_degree, m) * c;
  }
  TautPolynomial result = TautPolynomial::constant(n_points, trunc_degree, Rational(1));
  TautPolynomial power = result;
  for (int k = 1; k <= trunc_degree && !s.is_zero(); ++k) {
    power = power * s;
    power *= Rational(1, k);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

TautPolynomial psi_geometric(int n_points, int i, const Rational& weight, int trunc_degree) {
  if (i < 1 || i > n_points) throw std::invalid_argument("psi_geometric: point index out of range");
  TautPolynomial p(n_points, trunc_degree);
  Rational w(1);
  for (int k = 0; k <= trunc_degree; ++k) {
    TautMonomial mono{{}, std::vector<int>(n_points, 0)};
    mono.psi[i - 1] = k;
    p.add_term(mono, w);
    w *= weight;
  }
  return p;
}

EdgeSeries::EdgeSeries(int trunc_degree) : trunc_(trunc_degree) {
  if (trunc_degree < 0) throw std::invalid_argument("EdgeSeries: negative truncation degree");
  c_.resize(trunc_degree + 1);
  for (int a = 0; a <= trunc_degree; ++a) c_[a].resize(trunc_degree + 1 - a);
}

bool EdgeSeries::is_zero() const {
  for (const auto& row : c_)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

EdgeSeries operator*(const EdgeSeries& x, const EdgeSeries& y) {
  const int t = std::min(x.trunc_, y.trunc_);
  EdgeSeries out(t);
  for (int a1 = 0; a1 <= t; ++a1)
    for (int b1 = 0; a1 + b1 <= t; ++b1) {
      if (x.c_[a1][b1].is_zero()) continue;
      for (int a2 = 0; a1 + b1 + a2 <= t; ++a2)
        for (int b2 = 0; a1 + b1 + a2 + b2 <= t; ++b2)
          if (!y.c_[a2][b2].is_zero()) out.c_[a1 + a2][b1 + b2] += x.c_[a1][b1] * y.c_[a2][b2];
    }
  return out;
}

EdgeSeries edge_numerator(int w, int r, const Rational& x, int trunc_degree) {
  if (r < 1 || w < 0 || w >= r) throw std::invalid_argument("edge_numerator: residue out of range");
  // s = sum_m (-x)^m B_{m+1}(w/r)/(m(m+1)) (p^m - (-q)^m); numerator = 1 - exp(-s).
  EdgeSeries minus_s(trunc_degree);
  const Rational y(w, r);
  Rational xm(1);
  for (int m = 1; m <= trunc_degree; ++m) {
    xm *= -x;
    const Rational c = xm * bernoulli_poly(m + 1, y) / Rational(static_cast<long>(m) * (m + 1));
    minus_s.at(m, 0) -= c;
    minus_s.at(0, m) += (m % 2 == 0) ? c : -c;
  }
  EdgeSeries power(trunc_degree);
  power.at(0, 0) = Rational(1);
  EdgeSeries numerator(trunc_degree);
  for (int k = 1; k <= trunc_degree; ++k) {
    power = power * minus_s;
    const Rational inv_fact = Rational(1) / factorial(k);
    for (int a = 0; a <= trunc_degree; ++a)
      for (int b = 0; a + b <= trunc_degree; ++b) numerator.at(a, b) -= power.at(a, b) * inv_fact;
  }
  return numerator;
}

EdgeSeries divide_by_sum(const EdgeSeries& numerator) {
  const int t = numerator.trunc_degree();
  if (!numerator.at(0, 0).is_zero()) throw std::logic_error("divide_by_sum: nonzero constant term");
  EdgeSeries q(std::max(t - 1, 0));
  for (int k = 1; k <= t; ++k) {
    // degree-k part n_i p^i q^{k-i}; quotient c_i p^i q^{k-1-i}.
    std::vector<Rational> c(k);
    c[0] = numerator.at(0, k);
    for (int i = 1; i < k; ++i) c[i] = numerator.at(i, k - i) - c[i - 1];
    if (c[k - 1] != numerator.at(k, 0))
      throw std::logic_error("divide_by_sum: numerator is not divisible by (psi' + psi'')");
    for (int i = 0; i < k; ++i) q.at(i, k - 1 - i) = c[i];
  }
  return q;
}

EdgeSeries edge_local_factor(int w, int r, const Rational& x, int trunc_degree) {
  const EdgeSeries numerator = edge_numerator(w, r, x, trunc_degree + 1);
  EdgeSeries q = divide_by_sum(numerator);
  EdgeSeries sum(trunc_degree + 1);
  if (trunc_degree + 1 >= 1) {
    sum.at(1, 0) = Rational(1);
    sum.at(0, 1) = Rational(1);
  }
  // Re-multiplication check, degree by degree up to trunc + 1.
  EdgeSeries lifted(trunc_degree + 1);
  for (int a = 0; a <= trunc_degree; ++a)
    for (int b = 0; a + b <= trunc_degree; ++b) lifted.at(a, b) = q.at(a, b);
  if (!(lifted * sum == numerator)) throw std::logic_error("edge_local_factor: re-multiplication check failed");
  return q;
}

TautPolynomial substitute_edge(const EdgeSeries& series, int n_points, int trunc_degree, int slot_a,
                               int slot_b) {
  if (slot_a < 1 || slot_a > n_points || slot_b < 1 || slot_b > n_points)
    throw std::invalid_argument("substitute_edge: slot out of range");
  if (slot_a == slot_b) throw std::invalid_argument("substitute_edge: slot collision");
  TautPolynomial p(n_points, trunc_degree);
  const int t = std::min(series.trunc_degree(), trunc_degree);
  for (int a = 0; a <= t; ++a)
    for (int b = 0; a + b <= t; ++b) {
      if (series.at(a, b).is_zero()) continue;
      TautMonomial mono{{}, std::vector<int>(n_points, 0)};
      mono.psi[slot_a - 1] = a;
      mono.psi[slot_b - 1] = b;
      p.add_term(mono, series.at(a, b));
    }
  return p;
}

}  // namespace tautcalc
