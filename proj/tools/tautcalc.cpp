#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tautcalc/applications.hpp"
#include "tautcalc/identities.hpp"
#include "tautcalc/intersection.hpp"
#include "tautcalc/omega.hpp"

using namespace tautcalc;
using json = nlohmann::ordered_json;

namespace {

constexpr int kDimCap = 10;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string cache_path;
  std::string format = "text";
  int jobs = 1;
  int decimal = -1;
};

struct Row {
  int g;
  int n;
  Rational value;
  std::string route;
};

std::string render_value(const Rational& v, const Config& cfg) {
  if (cfg.decimal < 0) return v.str();
  const mpf_class f(v.raw(), static_cast<mp_bitcnt_t>(cfg.decimal * 4 + 64));
  std::ostringstream os;
  os << std::setprecision(cfg.decimal) << f;
  return os.str();
}

void print_rows(const std::vector<Row>& rows, const Config& cfg) {
  if (cfg.format == "csv") {
    std::cout << "g,n,value,route\n";
    for (const auto& r : rows) std::cout << r.g << ',' << r.n << ',' << render_value(r.value, cfg) << ',' << r.route << '\n';
  } else if (cfg.format == "json") {
    for (const auto& r : rows) {
      json j;
      j["g"] = r.g;
      j["n"] = r.n;
      j["value"] = render_value(r.value, cfg);
      j["route"] = r.route;
      std::cout << j.dump() << '\n';
    }
  } else if (rows.size() == 1) {
    std::cout << render_value(rows[0].value, cfg) << '\n';
  } else {
    for (const auto& r : rows)
      std::cout << std::left << std::setw(4) << r.g << std::setw(4) << r.n << std::setw(16) << r.route
                << render_value(r.value, cfg) << '\n';
  }
}

void check_type(int g, int n) {
  if (!is_stable(g, n))
    throw UsageError("(g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ") is not stable");
  if (moduli_dim(g, n) > kDimCap) throw UsageError("dimension above the hard cap " + std::to_string(kDimCap));
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + text);
    }
  }
  return out;
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Results must be
// written to slot i so the order never depends on scheduling.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::vector<ChiRoute> chi_routes(const std::string& name) {
  if (name == "all") return {ChiRoute::HarerZagier, ChiRoute::HodgeSum, ChiRoute::Omega};
  if (name == "harer-zagier" || name == "hz") return {ChiRoute::HarerZagier};
  if (name == "hodge") return {ChiRoute::HodgeSum};
  if (name == "omega") return {ChiRoute::Omega};
  throw UsageError("unknown route " + name);
}

std::vector<MVRoute> mv_routes(const std::string& name) {
  if (name == "all") return {MVRoute::Omega, MVRoute::HodgeSum};
  if (name == "omega") return {MVRoute::Omega};
  if (name == "hodge") return {MVRoute::HodgeSum};
  throw UsageError("unknown route " + name);
}

bool routes_agree(const std::vector<Row>& rows) {
  for (const auto& r : rows)
    if (r.g == rows.front().g && r.n == rows.front().n && r.value != rows.front().value) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection numbers on moduli spaces of curves"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  if (const char* env = std::getenv("TAUTCALC_CACHE")) cfg.cache_path = env;
  app.add_option("--cache", cfg.cache_path, "psi-integral cache file (default: $TAUTCALC_CACHE)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--decimal", cfg.decimal, "render values as decimals with this many digits")
      ->check(CLI::Range(1, 200));

  int g = 0, n = 0;
  std::string route = "all";

  auto* chi_cmd = app.add_subcommand("chi", "orbifold Euler characteristic chi_{g,n}");
  chi_cmd->add_option("g", g)->required();
  chi_cmd->add_option("n", n)->required();
  chi_cmd->add_option("--route", route, "harer-zagier, hodge, omega or all");

  auto* mv_cmd = app.add_subcommand("mv", "Masur-Veech volume MV_{g,n}/pi^{6g-6+2n}");
  mv_cmd->add_option("g", g)->required();
  mv_cmd->add_option("n", n)->required();
  mv_cmd->add_option("--route", route, "omega, hodge or all");

  int lambda_i = 0;
  std::vector<int> psi_exps;
  std::string test_class;
  auto* hodge_cmd = app.add_subcommand("hodge", "int lambda_i psi_1^d_1 ... psi_n^d_n");
  hodge_cmd->add_option("g", g)->required();
  hodge_cmd->add_option("n", n)->required();
  hodge_cmd->add_option("i", lambda_i)->required();
  hodge_cmd->add_option("d", psi_exps, "psi exponents, one per point");
  hodge_cmd->add_option("--T", test_class, "test class instead of psi exponents, e.g. k1*p1");

  int r = 1;
  long s = 0;
  std::string a_text, x_text = "1";
  auto* omega_cmd = app.add_subcommand("omega", "int Omega^{[x]}(r,s;a) * T");
  omega_cmd->add_option("g", g)->required();
  omega_cmd->add_option("n", n)->required();
  omega_cmd->add_option("--r", r)->check(CLI::PositiveNumber);
  omega_cmd->add_option("--s", s);
  omega_cmd->add_option("--a", a_text, "comma-separated a_i");
  omega_cmd->add_option("--x", x_text, "rational x");
  omega_cmd->add_option("--T", test_class, "test class, default 1");

  std::string grid_name = "small";
  int dimmax = -1, rmax = -1;
  auto* verify_cmd = app.add_subcommand("verify", "run the identity suite; one JSON line per check");
  verify_cmd->add_option("--grid", grid_name)->check(CLI::IsMember({"small", "full"}));
  verify_cmd->add_option("--dimmax", dimmax)->check(CLI::Range(0, kDimCap));
  verify_cmd->add_option("--rmax", rmax)->check(CLI::Range(1, 8));

  int gmax = -1;
  std::string quantity = "chi";
  auto* table_cmd = app.add_subcommand("table", "values for every stable (g,n) with 3g-3+n <= dimmax");
  table_cmd->add_option("--dimmax", dimmax)->required()->check(CLI::Range(0, kDimCap));
  table_cmd->add_option("--gmax", gmax)->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--quantity", quantity)->check(CLI::IsMember({"chi", "mv"}));
  table_cmd->add_option("--route", route, "route name or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  if (cfg.decimal >= 0) std::cerr << "warning: decimal output is rounded; exact values print as p/q\n";
  if (!cfg.cache_path.empty()) {
    const std::size_t skipped = psi_cache().load(cfg.cache_path);
    if (skipped > 0) std::cerr << "warning: skipped " << skipped << " corrupted cache lines\n";
  }

  int status = 0;
  try {
    if (chi_cmd->parsed()) {
      check_type(g, n);
      std::vector<Row> rows;
      for (ChiRoute rt : chi_routes(route)) rows.push_back({g, n, chi(g, n, rt).value, route_name(rt)});
      if (!routes_agree(rows)) {
        for (const auto& row : rows) std::cerr << row.route << ": " << row.value << '\n';
        status = kExitFail;
      }
      // text mode prints the common value once
      if (cfg.format == "text") rows.resize(1);
      print_rows(rows, cfg);
    } else if (mv_cmd->parsed()) {
      check_type(g, n);
      std::vector<Row> rows;
      for (MVRoute rt : mv_routes(route)) rows.push_back({g, n, mv(g, n, rt).value, route_name(rt)});
      if (!routes_agree(rows)) {
        for (const auto& row : rows) std::cerr << row.route << ": " << row.value << '\n';
        status = kExitFail;
      }
      if (cfg.format == "text") rows.resize(1);
      print_rows(rows, cfg);
    } else if (hodge_cmd->parsed()) {
      check_type(g, n);
      if (lambda_i < 0) throw UsageError("lambda index must be non-negative");
      const int D = moduli_dim(g, n);
      TautPolynomial T(n, D);
      if (!test_class.empty()) {
        T = TautPolynomial::parse(test_class, n, D);
      } else {
        if (psi_exps.empty()) psi_exps.assign(n, 0);
        if (static_cast<int>(psi_exps.size()) != n) throw UsageError("expected " + std::to_string(n) + " psi exponents");
        TautMonomial m;
        m.psi = psi_exps;
        if (std::any_of(m.psi.begin(), m.psi.end(), [](int d) { return d < 0; }))
          throw UsageError("psi exponents must be non-negative");
        T = TautPolynomial::monomial(n, D, m);
      }
      print_rows({{g, n, hodge_integral(g, n, lambda_i, T), "hodge"}}, cfg);
    } else if (omega_cmd->parsed()) {
      check_type(g, n);
      OmegaSpec spec;
      spec.r = r;
      spec.s = s;
      spec.a = parse_longs(a_text);
      spec.x = Rational::parse(x_text);
      spec.validate(g, n);
      const int D = moduli_dim(g, n);
      const TautPolynomial T =
          test_class.empty() ? TautPolynomial::constant(n, D, 1) : TautPolynomial::parse(test_class, n, D);
      print_rows({{g, n, omega_integral(g, n, spec, T), "omega"}}, cfg);
    } else if (verify_cmd->parsed()) {
      IdentityGrid grid;
      grid.dim_max = grid_name == "full" ? 4 : 2;
      if (dimmax >= 0) grid.dim_max = dimmax;
      if (rmax > 0) grid.r_max = rmax;
      int failures = 0;
      auto emit = [&](const CheckReport& rep) {
        if (!rep.pass()) ++failures;
        std::cout << rep.to_json().dump() << '\n';
      };
      for (int gg = 0; 3 * gg - 3 <= grid.dim_max; ++gg)
        for (int nn = 0; moduli_dim(gg, nn) + 1 <= grid.dim_max; ++nn)
          if (is_stable(gg, nn)) emit(chi_recursion_check(gg, nn));
      for (int gg = 0; 3 * gg - 3 <= grid.dim_max; ++gg)
        for (int nn = 0; moduli_dim(gg, nn) <= grid.dim_max; ++nn)
          if (is_stable(gg, nn)) emit(mv_segre_check(gg, nn));
      emit(dyz_identity_check(2));
      emit(check_counterexample_footnote({Rational(1), Rational(2), Rational(1, 2)}));
      for (int m = 1; m <= 2; ++m) emit(forgetful_pullback_check(1, 1, m));
      failures += run_identity_grid(grid, [&](const CheckReport& rep) {
        std::cout << rep.to_json().dump() << '\n';
      });
      std::cerr << (failures == 0 ? "all checks passed\n" : std::to_string(failures) + " checks failed\n");
      if (failures > 0) status = kExitFail;
    } else if (table_cmd->parsed()) {
      std::vector<std::pair<int, int>> cells;
      for (int gg = 0; 3 * gg - 3 <= dimmax && (gmax < 0 || gg <= gmax); ++gg)
        for (int nn = 0; moduli_dim(gg, nn) <= dimmax; ++nn)
          if (is_stable(gg, nn)) cells.emplace_back(gg, nn);
      std::vector<std::vector<Row>> results(cells.size());
      const bool is_chi = quantity == "chi";
      const auto chi_list = is_chi ? chi_routes(route) : std::vector<ChiRoute>{};
      const auto mv_list = is_chi ? std::vector<MVRoute>{} : mv_routes(route);
      parallel_for(static_cast<int>(cells.size()), cfg.jobs, [&](int i) {
        const auto [gg, nn] = cells[i];
        for (ChiRoute rt : chi_list) results[i].push_back({gg, nn, chi(gg, nn, rt).value, route_name(rt)});
        for (MVRoute rt : mv_list) results[i].push_back({gg, nn, mv(gg, nn, rt).value, route_name(rt)});
      });
      std::vector<Row> rows;
      for (auto& cell : results) {
        if (!routes_agree(cell)) status = kExitFail;
        rows.insert(rows.end(), cell.begin(), cell.end());
      }
      print_rows(rows, cfg);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!cfg.cache_path.empty()) psi_cache().save(cfg.cache_path);
  return status;
}
