#include "seqfree/cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <numeric>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqfree/error.hpp"
#include "seqfree/expansion/expansion.hpp"
#include "seqfree/hires/gk.hpp"
#include "seqfree/qseries/qseries.hpp"
#include "seqfree/wright/wright.hpp"

namespace seqfree::cli {

using exact::Rational;
using hires::BigComplex;
using hires::BigReal;
using hires::EvalConfig;
using nlohmann::json;

namespace {

// Significant digits printed for numeric table columns.
constexpr int kTableDigits = 20;
constexpr int kDeviationDigits = 6;
constexpr long kDefaultBits = 256;
constexpr long kZagierBits = 512;

const std::vector<std::string> kDefaultGrid = {"0.2", "0.1", "0.05", "0.025"};

EvalConfig make_config(const RunConfig& rc, long fallback) {
  const long bits = rc.precision_or(fallback);
  if (bits < 64) throw Error(ErrorCode::InvalidArgument, "--prec must be >= 64");
  return EvalConfig::with_precision(static_cast<mpfr_prec_t>(bits));
}

struct GridPoint {
  std::string text;
  Rational exact;
  BigReal value;
};

std::vector<GridPoint> parse_grid(const std::vector<std::string>& texts, mpfr_prec_t bits, const char* name) {
  std::vector<GridPoint> out;
  for (const auto& t : texts) {
    const Rational r = exact::parse_rational(t);
    if (r <= 0) throw Error(ErrorCode::InvalidArgument, std::string(name) + " values must be positive: " + t);
    out.push_back({t, r, BigReal(r, bits)});
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, std::string("empty ") + name + " grid");
  return out;
}

// Evaluates f on every grid point, optionally in parallel, keeping grid order.
template <typename Row>
std::vector<Row> map_grid(const std::vector<GridPoint>& grid, bool parallel, const std::function<Row(const GridPoint&)>& f) {
  std::vector<Row> rows;
  if (!parallel) {
    for (const auto& p : grid) rows.push_back(f(p));
    return rows;
  }
  std::vector<std::future<Row>> jobs;
  for (const auto& p : grid) jobs.push_back(std::async(std::launch::async, f, std::cref(p)));
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

std::string dec(const BigReal& x, int digits = kTableDigits) { return hires::to_decimal(x, digits); }

struct VerifyRow {
  BigReal g, expansion, deviation, R, W0;
};

std::vector<VerifyRow> verify_rows(const RunConfig& rc, const std::vector<GridPoint>& grid, const EvalConfig& cfg,
                                   bool with_extras) {
  require_valid_k(rc.k);
  const expansion::PuiseuxExpansion pe = expansion::make_puiseux(rc.k, rc.N, cfg);
  return map_grid<VerifyRow>(grid, rc.parallel, [&](const GridPoint& p) {
    VerifyRow r;
    r.g = hires::gk_num(rc.k, p.value, cfg);
    r.expansion = pe.eval(p.value);
    r.deviation = hires::abs((r.g - r.expansion) / r.g);
    if (with_extras) {
      r.R = hires::relative_error_num(rc.k, p.value, cfg);
      r.W0 = wright::W_j_num(rc.k, 0, expansion::w_of_s(rc.k, p.value, cfg), cfg);
    }
    return r;
  });
}

// Deviations must strictly decrease as s decreases.
bool monotone_in_s(const std::vector<GridPoint>& grid, const std::vector<VerifyRow>& rows) {
  std::vector<std::size_t> idx(grid.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return grid[a].exact > grid[b].exact; });
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (!(rows[idx[i]].deviation < rows[idx[i - 1]].deviation)) return false;
  return true;
}

const std::vector<std::string>& grid_or_default(const RunConfig& rc) { return rc.s_grid.empty() ? kDefaultGrid : rc.s_grid; }

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

int cmd_coeffs(const RunConfig& rc, std::ostream& out) {
  if (rc.order < 0) throw Error(ErrorCode::InvalidArgument, "--order must be >= 0");
  exact::FormalSeries series = exact::FormalSeries::zero(0);
  if (rc.which == "gk") {
    if (rc.route == "andrews")
      series = qseries::gk_series_andrews(rc.k, rc.order);
    else if (rc.route == "oracle")
      series = qseries::gk_from_oracle(rc.k, rc.order);
    else
      throw Error(ErrorCode::InvalidArgument, "--route must be andrews or oracle");
  } else if (rc.which == "Gk") {
    series = qseries::Gk_series_oracle(rc.k, rc.order);
  } else if (rc.which == "chi") {
    series = qseries::chi_series(rc.order);
  } else {
    throw Error(ErrorCode::InvalidArgument, "--which must be gk, Gk or chi");
  }
  if (rc.format == Format::json) {
    out << json{{"which", rc.which}, {"k", rc.k}, {"order", rc.order}, {"terms", exact::to_json(series)}}.dump(2)
        << "\n";
    return kExitOk;
  }
  out << "n,coefficient\n";
  for (int n = 0; n <= rc.order; ++n) out << n << "," << exact::to_string(series.coefficient(n)) << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& rc, std::ostream& out) {
  const EvalConfig cfg = make_config(rc, kDefaultBits);
  if (rc.N < 0) throw Error(ErrorCode::InvalidArgument, "--N must be >= 0");
  const auto grid = parse_grid(grid_or_default(rc), cfg.precision_bits, "s");
  const auto rows = verify_rows(rc, grid, cfg, true);
  if (rc.format == Format::json) {
    json arr = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i)
      arr.push_back({{"s", grid[i].text},
                     {"g_k", dec(rows[i].g)},
                     {"expansion", dec(rows[i].expansion)},
                     {"rel_dev", dec(rows[i].deviation, kDeviationDigits)},
                     {"R_k", dec(rows[i].R)},
                     {"W0", dec(rows[i].W0)}});
    out << json{{"k", rc.k}, {"N", rc.N}, {"precision_bits", cfg.precision_bits}, {"rows", arr}}.dump(2) << "\n";
  } else {
    out << "s,g_k,expansion,rel_dev,R_k,W0\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      out << grid[i].text << "," << dec(rows[i].g) << "," << dec(rows[i].expansion) << ","
          << dec(rows[i].deviation, kDeviationDigits) << "," << dec(rows[i].R) << "," << dec(rows[i].W0) << "\n";
  }
  return monotone_in_s(grid, rows) ? kExitOk : kExitCheckFailed;
}

int cmd_zagier(const RunConfig& rc, std::ostream& out) {
  const EvalConfig cfg = make_config(rc, kZagierBits);
  const auto z = expansion::zagier_t_coeffs(rc.m_max, cfg);
  const auto& ref = expansion::zagier_reference();
  const mpfr_prec_t bits = cfg.precision_bits;
  // c1 and c2 from their closed forms, checked against beta_3(1)/4 and beta_3(2)/20.
  const BigReal c1 = expansion::zagier_c1(cfg), c2 = expansion::zagier_c2(cfg);
  const BigReal c1b = expansion::beta_coeff(3, 1, cfg) / 4L, c2b = expansion::beta_coeff(3, 2, cfg) / 20L;
  const BigReal tol = BigReal::parse("1e-40", bits);
  auto agree = [&](const BigReal& a, const BigReal& b) { return hires::abs(a - b) <= tol * hires::abs(a); };
  const int digits = std::min(45, hires::reliable_digits(bits));

  struct Row {
    std::string name, m, value, status, formula;
  };
  std::vector<Row> rows;
  bool ok = true;
  auto constant = [&](const char* name, const BigReal& v, const BigReal& from_beta, const char* formula) {
    const bool match = agree(v, from_beta);
    ok = ok && match;
    rows.push_back({name, "", dec(v, digits), match ? "MATCH" : "FAIL", formula});
  };
  constant("c1", c1, c1b, "3^(-1/6)*Gamma(1/3)/(8*pi)");
  constant("c2", c2, c2b, "3^(1/6)*Gamma(2/3)/(32*pi)");
  auto series = [&](const char* name, const std::vector<Rational>& got, const std::vector<Rational>& want) {
    for (std::size_t m = 0; m < got.size(); ++m) {
      std::string status = "UNLISTED";
      if (m < want.size()) {
        status = got[m] == want[m] ? "MATCH" : "FAIL";
        ok = ok && got[m] == want[m];
      }
      rows.push_back({name, std::to_string(m), exact::to_string(got[m]), status, ""});
    }
  };
  series("t1", z.t1, ref.t1);
  series("t2", z.t2, ref.t2);

  if (rc.format == Format::json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json o{{"name", r.name}, {"value", r.value}, {"status", r.status}};
      if (!r.m.empty()) o["m"] = std::stoi(r.m);
      if (!r.formula.empty()) o["formula"] = r.formula;
      arr.push_back(o);
    }
    out << json{{"precision_bits", bits}, {"m_max", rc.m_max}, {"rows", arr}}.dump(2) << "\n";
  } else {
    out << "name,m,value,status,formula\n";
    for (const auto& r : rows) out << r.name << "," << r.m << "," << r.value << "," << r.status << "," << r.formula << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_beta(const RunConfig& rc, std::ostream& out) {
  const EvalConfig cfg = make_config(rc, kZagierBits);
  require_valid_k(rc.k);
  if (rc.m_max < 0) throw Error(ErrorCode::InvalidArgument, "--m-max must be >= 0");
  const int jmax = rc.k * (rc.m_max + 1) - 1;
  const auto betas = expansion::beta_coeffs(rc.k, jmax, cfg);
  const int digits = std::min(40, hires::reliable_digits(cfg.precision_bits));
  json arr = json::array();
  if (rc.format == Format::csv) out << "j,beta,ratio\n";
  for (int j = 1; j <= jmax; ++j) {
    std::string ratio;
    if (j > rc.k && j % rc.k != 0) ratio = exact::to_string(expansion::rational_ratio(rc.k, j % rc.k, j / rc.k, cfg));
    const std::string value = dec(betas[static_cast<std::size_t>(j - 1)], digits);
    if (rc.format == Format::csv) {
      out << j << "," << value << "," << ratio << "\n";
    } else {
      json o{{"j", j}, {"beta", value}};
      if (!ratio.empty()) o["ratio"] = ratio;
      arr.push_back(o);
    }
  }
  if (rc.format == Format::json)
    out << json{{"k", rc.k}, {"precision_bits", cfg.precision_bits}, {"rows", arr}}.dump(2) << "\n";
  return kExitOk;
}

int cmd_wright(const RunConfig& rc, std::ostream& out) {
  const EvalConfig cfg = make_config(rc, kDefaultBits);
  const mpfr_prec_t bits = cfg.precision_bits;
  if (rc.w_grid.empty()) throw Error(ErrorCode::InvalidArgument, "--w is required");
  const auto grid = parse_grid(rc.w_grid, bits, "w");
  json arr = json::array();
  if (rc.which == "W") {
    require_valid_k(rc.k);
    if (rc.order < 0) throw Error(ErrorCode::InvalidArgument, "--order must be >= 0");
    const auto jmax = static_cast<unsigned>(rc.order);
    const auto rows = map_grid<std::vector<BigReal>>(
        grid, rc.parallel, [&](const GridPoint& p) { return wright::W_j_nums(rc.k, jmax, p.value, cfg); });
    if (rc.format == Format::csv) out << "w,j,W_j,expansion,difference\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (unsigned j = 0; j <= jmax; ++j) {
        const BigReal e = wright::Wj_expansion(rc.k, j, rc.L, grid[i].value, cfg);
        const BigReal& v = rows[i][j];
        if (rc.format == Format::csv)
          out << grid[i].text << "," << j << "," << dec(v) << "," << dec(e) << "," << dec(v - e, kDeviationDigits)
              << "\n";
        else
          arr.push_back({{"w", grid[i].text}, {"j", j}, {"W_j", dec(v)}, {"expansion", dec(e)},
                         {"difference", dec(v - e, kDeviationDigits)}});
      }
  } else if (rc.which == "phi") {
    const wright::WrightParams params{exact::parse_rational(rc.rho), exact::parse_rational(rc.beta)};
    const Rational arg = exact::parse_rational(rc.arg);
    const double rho = params.rho.get_d();
    const auto rows = map_grid<BigComplex>(grid, rc.parallel, [&](const GridPoint& p) {
      // Cancellation allowance from the size of the largest term.
      const double peak = (1 - rho) * std::pow(p.exact.get_d() * std::pow(std::abs(rho), -rho), 1 / (1 - rho));
      const mpfr_prec_t zbits = bits + 64 + static_cast<mpfr_prec_t>(std::max(0.0, peak) / M_LN2);
      const BigReal r(p.exact, zbits);
      const BigComplex z = hires::expi(hires::pi(zbits) * BigReal(arg, zbits)) * r;
      return wright::wright_phi(params, z, cfg);
    });
    if (rc.format == Format::csv) out << "z_abs,arg,re,im\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (rc.format == Format::csv)
        out << grid[i].text << "," << rc.arg << "," << dec(rows[i].re) << "," << dec(rows[i].im) << "\n";
      else
        arr.push_back({{"z_abs", grid[i].text}, {"arg", rc.arg}, {"re", dec(rows[i].re)}, {"im", dec(rows[i].im)}});
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "--which must be W or phi");
  }
  if (rc.format == Format::json) out << json{{"precision_bits", bits}, {"rows", arr}}.dump(2) << "\n";
  return kExitOk;
}

int cmd_plotdata(const RunConfig& rc, std::ostream& out) {
  const EvalConfig cfg = make_config(rc, kDefaultBits);
  if (rc.N < 0) throw Error(ErrorCode::InvalidArgument, "--N must be >= 0");
  const auto grid = parse_grid(grid_or_default(rc), cfg.precision_bits, "s");
  const auto rows = verify_rows(rc, grid, cfg, false);
  json arr = json::array();
  if (rc.format == Format::csv) out << "s,log_s,log_rel_dev\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string ls = dec(hires::log(grid[i].value)), ld = dec(hires::log(rows[i].deviation));
    if (rc.format == Format::csv)
      out << grid[i].text << "," << ls << "," << ld << "\n";
    else
      arr.push_back({{"s", grid[i].text}, {"log_s", ls}, {"log_rel_dev", ld}});
  }
  if (rc.format == Format::json) out << json{{"k", rc.k}, {"N", rc.N}, {"rows", arr}}.dump(2) << "\n";
  return kExitOk;
}

int run(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, int (*)(const RunConfig&, std::ostream&)> commands = {
      {"coeffs", cmd_coeffs}, {"verify", cmd_verify}, {"zagier", cmd_zagier},
      {"beta", cmd_beta},     {"wright", cmd_wright}, {"plotdata", cmd_plotdata}};
  const auto it = commands.find(rc.subcommand);
  if (it == commands.end()) {
    err << "unknown subcommand: " << rc.subcommand << "\n";
    return kExitUsage;
  }
  try {
    if (rc.out.empty()) return it->second(rc, out);
    std::ofstream file(rc.out);
    if (!file) {
      err << "cannot open " << rc.out << "\n";
      return kExitUsage;
    }
    return it->second(rc, file);
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::NonConvergent:
      case ErrorCode::TermCapExceeded:
        return kExitNonConvergent;
      case ErrorCode::ReconstructionFailed:
      case ErrorCode::DivisionByZeroBeta:
        return kExitReconstruction;
      default:
        return kExitUsage;
    }
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partitions without k consecutive part sizes: series, numerics and asymptotics"};
  app.require_subcommand(1);
  RunConfig rc;
  std::string s_list, w_list, format = "csv";
  long prec = 0;
  bool serial = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--k", rc.k, "k >= 2");
    sub->add_option("--prec", prec, "precision in bits (>= 64)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", rc.out, "output file (default: stdout)");
  };
  auto* coeffs = app.add_subcommand("coeffs", "exact series coefficients");
  common(coeffs);
  coeffs->add_option("--order", rc.order, "truncation order");
  coeffs->add_option("--which", rc.which, "gk, Gk or chi")->check(CLI::IsMember({"gk", "Gk", "chi"}));
  coeffs->add_option("--route", rc.route, "gk route: andrews or oracle")->check(CLI::IsMember({"andrews", "oracle"}));

  auto* verify = app.add_subcommand("verify", "g_k against the asymptotic expansion");
  auto* plot = app.add_subcommand("plotdata", "log deviation against log s");
  for (auto* sub : {verify, plot}) {
    common(sub);
    sub->add_option("--N", rc.N, "expansion order");
    sub->add_option("--s", s_list, "comma separated s values");
    sub->add_flag("--serial", serial, "evaluate grid points one at a time");
  }

  auto* zagier = app.add_subcommand("zagier", "k = 3 constants and rational series");
  common(zagier);
  auto* beta = app.add_subcommand("beta", "Puiseux coefficients and their rational ratios");
  common(beta);
  for (auto* sub : {zagier, beta}) sub->add_option("--m-max,--order", rc.m_max, "highest power of s");

  auto* wr = app.add_subcommand("wright", "Wright function values");
  common(wr);
  wr->add_option("--which", rc.which, "W or phi")->check(CLI::IsMember({"W", "phi"}));
  wr->add_option("--w", w_list, "comma separated w (or |z| for phi)");
  wr->add_option("--order", rc.order, "largest moment j for W");
  wr->add_option("--L", rc.L, "expansion terms");
  wr->add_option("--rho", rc.rho, "phi: rho");
  wr->add_option("--beta", rc.beta, "phi: beta");
  wr->add_option("--arg", rc.arg, "phi: z = |z| exp(i pi arg)");
  wr->add_flag("--serial", serial, "evaluate grid points one at a time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  rc.subcommand = app.get_subcommands().front()->get_name();
  if (rc.subcommand == "wright" && rc.which == "gk") rc.which = "W";
  if (prec != 0) rc.precision_bits = prec;
  rc.format = format == "json" ? Format::json : Format::csv;
  rc.s_grid = split_list(s_list);
  rc.w_grid = split_list(w_list);
  rc.parallel = !serial;
  return run(rc, out, err);
}

}  // namespace seqfree::cli
