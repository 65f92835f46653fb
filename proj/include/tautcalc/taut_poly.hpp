#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tautcalc/rational.hpp"

namespace tautcalc {

/// kappa_{m_1}^{e_1} ... kappa_{m_k}^{e_k} * psi_1^{d_1} ... psi_n^{d_n}.
///
/// kappa is kept as (m, e) pairs sorted by m with every e >= 1; kappa_0 is
/// never stored (it is the scalar 2g-2+n and gets substituted at use sites).
struct TautMonomial {
  std::vector<std::pair<int, int>> kappa;
  std::vector<int> psi;

  int kappa_degree() const;
  int psi_degree() const;
  int degree() const { return kappa_degree() + psi_degree(); }
  bool has_kappa() const { return !kappa.empty(); }

  /// Multiplies kappa parts, merging exponents.
  static std::vector<std::pair<int, int>> merge_kappa(const std::vector<std::pair<int, int>>& a,
                                                      const std::vector<std::pair<int, int>>& b);

  friend auto operator<=>(const TautMonomial&, const TautMonomial&) = default;
  friend bool operator==(const TautMonomial&, const TautMonomial&) = default;
};

/// Truncated polynomial in kappa_1, kappa_2, ... and psi_1..psi_n with exact
/// coefficients. Terms above trunc_degree are dropped eagerly; zero
/// coefficients are never stored.
class TautPolynomial {
 public:
  TautPolynomial(int n_points, int trunc_degree);

  static TautPolynomial constant(int n_points, int trunc_degree, const Rational& c);
  static TautPolynomial kappa(int n_points, int trunc_degree, int m, int power = 1);
  /// psi_i^power; i is 1-based.
  static TautPolynomial psi(int n_points, int trunc_degree, int i, int power = 1);
  static TautPolynomial monomial(int n_points, int trunc_degree, const TautMonomial& mono,
                                 const Rational& c = Rational(1));

  int n_points() const { return n_points_; }
  int trunc_degree() const { return trunc_; }
  const std::map<TautMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * mono, dropping it when above the truncation degree.
  void add_term(const TautMonomial& mono, const Rational& c);
  Rational coefficient(const TautMonomial& mono) const;

  /// Degree-k homogeneous component.
  TautPolynomial homogeneous_part(int k) const;
  /// Same terms, new truncation (terms above it are dropped).
  TautPolynomial retruncated(int trunc_degree) const;

  TautPolynomial& operator+=(const TautPolynomial& o);
  TautPolynomial& operator-=(const TautPolynomial& o);
  TautPolynomial& operator*=(const Rational& c);
  friend TautPolynomial operator+(TautPolynomial a, const TautPolynomial& b) { return a += b; }
  friend TautPolynomial operator-(TautPolynomial a, const TautPolynomial& b) { return a -= b; }
  friend TautPolynomial operator*(TautPolynomial a, const Rational& c) { return a *= c; }
  friend TautPolynomial operator*(const TautPolynomial& a, const TautPolynomial& b);
  friend bool operator==(const TautPolynomial& a, const TautPolynomial& b) {
    return a.n_points_ == b.n_points_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

  /// Canonical rendering, e.g. "1 - 3/4*k2 + k1*p1^2". kappa_m prints as km,
  /// psi_i as pi; terms follow the canonical monomial order.
  std::string render() const;
  /// Inverse of render() (also accepts any term order and repeated monomials).
  static TautPolynomial parse(std::string_view text, int n_points, int trunc_degree);

 private:
  void check_compatible(const TautPolynomial& o) const;

  int n_points_;
  int trunc_;
  std::map<TautMonomial, Rational> terms_;
};

TautPolynomial tp_add(const TautPolynomial& a, const TautPolynomial& b);
TautPolynomial tp_mul(const TautPolynomial& a, const TautPolynomial& b);
TautPolynomial tp_scale(const TautPolynomial& a, const Rational& c);

/// exp(sum_m coeffs[m] kappa_m), truncated.
TautPolynomial exp_kappa_series(const std::map<int, Rational>& coeffs, int n_points, int trunc_degree);

/// sum_{k <= trunc} weight^k psi_i^k, i.e. 1/(1 - weight psi_i). i is 1-based.
TautPolynomial psi_geometric(int n_points, int i, const Rational& weight, int trunc_degree);

/// Bivariate truncated series in two half-edge classes (psi', psi'') stored
/// densely; coefficient (a, b) multiplies psi'^a psi''^b with a + b <= trunc.
class EdgeSeries {
 public:
  explicit EdgeSeries(int trunc_degree);

  int trunc_degree() const { return trunc_; }
  const Rational& at(int a, int b) const { return c_[a][b]; }
  Rational& at(int a, int b) { return c_[a][b]; }
  bool is_zero() const;

  friend EdgeSeries operator*(const EdgeSeries& x, const EdgeSeries& y);
  friend bool operator==(const EdgeSeries&, const EdgeSeries&) = default;

 private:
  int trunc_;
  std::vector<std::vector<Rational>> c_;
};

/// Numerator 1 - exp(-sum_m (-x)^m B_{m+1}(w/r)/(m(m+1)) (psi'^m - (-psi'')^m)),
/// truncated at total degree trunc.
EdgeSeries edge_numerator(int w, int r, const Rational& x, int trunc_degree);

/// Exact division of an edge series by (psi' + psi''); throws
/// std::logic_error if the division leaves a remainder.
EdgeSeries divide_by_sum(const EdgeSeries& numerator);

/// Edge factor of the stable-graph formula: the numerator above divided by
/// (psi' + psi''), truncated at total degree trunc. The quotient is
/// re-multiplied and compared against the numerator before returning.
EdgeSeries edge_local_factor(int w, int r, const Rational& x, int trunc_degree);

/// Maps psi'^a psi''^b onto psi_{slot_a}^a psi_{slot_b}^b (1-based points).
/// The slots must be distinct points (a self-loop uses its two half-edge points).
TautPolynomial substitute_edge(const EdgeSeries& series, int n_points, int trunc_degree, int slot_a,
                               int slot_b);

}  // namespace tautcalc
