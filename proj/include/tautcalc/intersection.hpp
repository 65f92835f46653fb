#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "tautcalc/rational.hpp"
#include "tautcalc/report.hpp"
#include "tautcalc/taut_poly.hpp"

namespace tautcalc {

inline int moduli_dim(int g, int n) { return 3 * g - 3 + n; }
inline bool is_stable(int g, int n) { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }

/// Memo table for <tau_{d_1} ... tau_{d_n}>_g. Keys are (g, exponents sorted
/// descending). Concurrent readers, exclusive writers; a racing writer stores
/// the same value, so double computation is harmless.
class PsiCache {
 public:
  static constexpr const char* kHeader = "# tautcalc psi-cache v1";

  bool lookup(int g, const std::vector<int>& key, Rational& out) const;
  void store(int g, const std::vector<int>& key, const Rational& value);
  std::size_t size() const;
  void clear();

  /// Loads "g;d1,...,dn;p/q" lines. Malformed lines are skipped and counted;
  /// a missing file is not an error. Returns the number of skipped lines.
  std::size_t load(const std::string& path);
  /// Writes all entries sorted by key, header first.
  void save(const std::string& path) const;

 private:
  mutable std::shared_mutex mu_;
  std::map<std::pair<int, std::vector<int>>, Rational> table_;
};

PsiCache& psi_cache();

/// Witten-Kontsevich number <tau_{d_1} ... tau_{d_n}>_g by the DVV recursion.
/// Throws std::invalid_argument when (g, n) is unstable or some d_i < 0.
Rational psi_integral(int g, const std::vector<int>& d);

/// int_{Mbar_{g,n}} psi^d kappa_{m_1}^{e_1} ... with kappa given as sorted
/// (m, e) pairs. kappa monomials are turned into extra marked points through
/// the added-point expansion of exp(sum u_m kappa_m). n = 0 is allowed when
/// g >= 2.
Rational kappa_psi_integral(int g, const std::vector<int>& d, const std::vector<std::pair<int, int>>& kappa);

/// Integrates a polynomial in psi and kappa against the fundamental class.
/// Only the top-degree part contributes.
Rational integrate_mixed(int g, int n, const TautPolynomial& p);

/// Checks pi^* kappa_m = kappa_m - psi_{n+1}^m through the projection formula:
/// int_{g,n+1} psi^d (kappa_m - psi_{n+1}^m) psi_{n+1}^{k+1}
///   = int_{g,n} psi^d kappa_m kappa_k   (kappa_0 = 2g-2+n)
/// over all psi-monomials d of the right degree.
CheckReport forgetful_pullback_check(int g, int n, int m);

}  // namespace tautcalc
