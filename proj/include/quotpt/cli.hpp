#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quotpt/integrals.hpp"
#include "quotpt/localization.hpp"
#include "quotpt/oracle.hpp"
#include "quotpt/partitions.hpp"
#include "quotpt/qseries.hpp"
#include "quotpt/tpoly.hpp"

namespace quotpt::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatEnv = "QUOTPT_FORMAT";

enum ExitCode : int { kOk = 0, kContract = 1, kUsage = 2, kCheckFailed = 3 };

struct Outcome {
  int code = kOk;
  std::string out;
  std::string err;
};

inline Json to_json(const TPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json{{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return Json{{"t_terms", std::move(terms)}};
}

inline Json to_json(const QSeries& s) {
  Json arr = Json::array();
  for (const auto& [k, c] : s.terms()) {
    Json entry{{"q", k}};
    entry.update(to_json(c));
    arr.push_back(std::move(entry));
  }
  return arr;
}

inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

namespace detail {

struct Params {
  int genus = 0;
  int degree = 0;
  int e = 0;
  int n = 0;
  int chi = 0;
  int chi_max = 0;
  int order = 0;
  int gmax = 0;
  int rank = 2;
  int a_exp = 0;
  int even_pairs = 0;
  int k = 0;
  bool check = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

inline Json header(const Params& p) { return Json{{"genus", p.genus}, {"degree", p.degree}}; }

}  // namespace detail

/// Parses and executes one invocation. `args` excludes the program name.
/// `env_format` is the default output format when --format is absent.
inline Outcome run(const std::vector<std::string>& args, std::optional<std::string> env_format = std::nullopt) {
  using detail::Params;
  using detail::require;
  Params p;
  std::string format = env_format.value_or("text");
  std::string out_path;
  bool parallel = false;

  CLI::App app{"Residue stable pair invariants of local curves in degree two", "quotpt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--parallel", parallel, "Spread independent components across threads");
  app.add_option("--out", out_path, "Write the result to this file");

  auto gd_opts = [&](CLI::App* sub, bool need_genus = true) {
    if (need_genus) sub->add_option("--genus", p.genus, "Curve genus")->required();
    sub->add_option("--degree", p.degree, "Degree of the rank-2 bundle")->required();
  };

  auto* pt_series_cmd = app.add_subcommand("pt-series", "Stable pairs series through q^chi-max");
  gd_opts(pt_series_cmd);
  pt_series_cmd->add_option("--chi-max", p.chi_max, "Highest Euler characteristic")->required();
  pt_series_cmd->add_flag("--check", p.check, "Compare with the closed form, exit 3 on mismatch");

  auto* pt_inv_cmd = app.add_subcommand("pt-invariant", "Single stable pairs invariant");
  gd_opts(pt_inv_cmd);
  pt_inv_cmd->add_option("--chi", p.chi, "Euler characteristic")->required();

  auto* contrib_cmd = app.add_subcommand("contribution", "Contribution of one fixed component");
  gd_opts(contrib_cmd);
  contrib_cmd->add_option("--e", p.e, "Subsheaf degree")->required();
  contrib_cmd->add_option("--n", p.n, "Divisor degree")->required();

  auto* g0_cmd = app.add_subcommand("genus0-c", "Genus-zero component contribution, direct residue");
  gd_opts(g0_cmd, false);
  g0_cmd->add_option("--e", p.e, "Subsheaf degree")->required();
  g0_cmd->add_option("--n", p.n, "Divisor degree")->required();

  auto* qi_cmd = app.add_subcommand("quot-integral", "Integral of a^a-exp times an even b-monomial");
  gd_opts(qi_cmd);
  qi_cmd->add_option("--e", p.e, "Subsheaf degree");
  qi_cmd->add_option("--rank", p.rank, "Rank N of E");
  qi_cmd->add_option("--a-exp", p.a_exp, "Power of a")->required();
  qi_cmd->add_option("--even-pairs", p.even_pairs, "Number of b pairs")->required();

  auto* ti_cmd = app.add_subcommand("theta-integral", "Integral of a^(m-1+k) theta^(g-k)");
  ti_cmd->add_option("--genus", p.genus, "Curve genus")->required();
  ti_cmd->add_option("--rank", p.rank, "Rank N of E");
  ti_cmd->add_option("--k", p.k, "Index k in [0, g]")->required();

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Exterior algebra oracle against the monomial rule");
  oracle_cmd->add_option("--gmax", p.gmax, "Largest genus, at most 4")->required();

  auto* gwpt_cmd = app.add_subcommand("gw-pt-check", "GW/PT correspondence as rational functions");
  gd_opts(gwpt_cmd);

  auto* min_cmd = app.add_subcommand("minimal", "Invariant in minimal Euler characteristic");
  gd_opts(min_cmd);

  auto* maxsub_cmd = app.add_subcommand("max-subbundles", "Number of maximal subbundles, 2^g");
  maxsub_cmd->add_option("--genus", p.genus, "Curve genus")->required();

  auto* mac_cmd = app.add_subcommand("macmahon", "MacMahon function through q^order");
  mac_cmd->add_option("--order", p.order, "Truncation order")->required();

  auto* zdt0_cmd = app.add_subcommand("zdt0", "Degree-zero DT series through q^order");
  gd_opts(zdt0_cmd);
  zdt0_cmd->add_option("--order", p.order, "Truncation order")->required();

  Outcome res;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::CallForAllHelp&) {
    res.out = app.help("", CLI::AppFormatMode::All);
    return res;
  } catch (const CLI::ParseError& e) {
    res.code = kUsage;
    res.err = std::string("error: ") + e.what() + "\n\n" + app.help();
    return res;
  }
  if (format != "text" && format != "json") {
    res.code = kUsage;
    res.err = "error: unknown format '" + format + "' (from " + kFormatEnv + ")\n";
    return res;
  }
  const bool json = format == "json";
  const GeomData gd{p.genus, p.degree};

  try {
    std::ostringstream text;
    Json j;
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    if (name != "genus0-c" && name != "macmahon" && name != "oracle-check") require(p.genus >= 0, "--genus must be nonnegative");

    if (name == "pt-series") {
      const QSeries s = pt_series(gd, p.chi_max, parallel);
      j = detail::header(p);
      j["series"] = to_json(s);
      j["meta"] = Json{{"chi_min", min_chi(gd)}};
      text << s.to_string() << "\n";
      if (p.check) {
        const auto cmp = compare_with_closed_form(gd, p.chi_max, parallel);
        j["meta"]["closed_form_match"] = cmp.match();
        if (!cmp.match()) {
          j["closed_form"] = to_json(cmp.closed_form);
          text << "closed form: " << cmp.closed_form.to_string() << "\n";
          res.code = kCheckFailed;
        }
      }
    } else if (name == "pt-invariant") {
      const TPoly v = pt_invariant(gd, p.chi, parallel);
      j = detail::header(p);
      j["series"] = Json::array({Json{{"q", p.chi}}});
      j["series"][0].update(to_json(v));
      j["meta"] = Json{{"chi_min", min_chi(gd)}};
      text << v.to_string() << "\n";
    } else if (name == "contribution") {
      require(p.n >= 0, "--n must be nonnegative");
      const FixedComponent comp{p.e, p.n};
      const TPoly v = component_contribution(gd, comp);
      j = detail::header(p);
      j["e"] = p.e;
      j["n"] = p.n;
      j["value"] = to_json(v);
      j["meta"] = Json{{"chi", comp.chi(gd)}};
      text << v.to_string() << "\n";
    } else if (name == "genus0-c") {
      require(p.n >= 0, "--n must be nonnegative");
      const TPoly v = genus0_C(p.degree, p.e, p.n);
      j = Json{{"genus", 0}, {"degree", p.degree}, {"e", p.e}, {"n", p.n}, {"value", to_json(v)}};
      text << v.to_string() << "\n";
    } else if (name == "quot-integral") {
      require(p.rank >= 1, "--rank must be positive");
      require(p.even_pairs >= 0 && p.even_pairs <= p.genus, "--even-pairs must lie in [0, genus]");
      const QuotContext ctx{p.genus, p.rank, p.degree, p.e, 0};
      if (ctx.vdim1() < 0) throw std::domain_error("component has negative expected dimension");
      const TPoly v = quot_intersection(ctx, p.a_exp, p.even_pairs);
      j = detail::header(p);
      j["value"] = to_json(v);
      j["meta"] = Json{{"rank", p.rank}, {"vdim1", ctx.vdim1()}};
      text << v.to_string() << "\n";
    } else if (name == "theta-integral") {
      require(p.rank >= 1, "--rank must be positive");
      require(p.k >= 0 && p.k <= p.genus, "--k must lie in [0, genus]");
      const TPoly v = quot_theta_integral(QuotContext{p.genus, p.rank, 0, 0, 0}, p.k);
      j = Json{{"genus", p.genus}, {"value", to_json(v)}, {"meta", Json{{"rank", p.rank}, {"k", p.k}}}};
      text << v.to_string() << "\n";
    } else if (name == "oracle-check") {
      require(p.gmax >= 0 && p.gmax <= oracle::kMaxGenus, "--gmax must lie in [0, 4]");
      const auto report = oracle::validate_mainformula(p.gmax);
      Json rows = Json::array();
      std::size_t passed = 0;
      for (const auto& r : report.rows) {
        if (r.match()) {
          ++passed;
          continue;
        }
        rows.push_back(Json{{"genus", r.g}, {"j", r.j}, {"k", r.k}, {"b", r.b},
                            {"oracle", r.oracle.get_str()}, {"closed_form", r.closed_form.get_str()}});
        text << "mismatch g=" << r.g << " j=" << r.j << " k=" << r.k << " b=" << r.b << ": oracle "
             << r.oracle.get_str() << ", closed form " << r.closed_form.get_str() << "\n";
      }
      j = Json{{"gmax", p.gmax}, {"rows", report.rows.size()}, {"passed", passed}, {"mismatches", rows}};
      text << passed << "/" << report.rows.size() << " rows agree\n";
      if (!report.all_pass()) res.code = kCheckFailed;
    } else if (name == "gw-pt-check") {
      const QRatFun gw = zgw_s_form(gd).to_q() * QRatFun::q_power(gd.d + 2 - 2 * gd.g);
      const QRatFun pt = zpt_closed(gd);
      const bool ok = gw == pt;
      j = detail::header(p);
      j["pass"] = ok;
      j["gw"] = gw.to_string();
      j["pt"] = pt.to_string();
      text << (ok ? "pass" : "FAIL") << "\n" << "gw: " << gw.to_string() << "\n" << "pt: " << pt.to_string() << "\n";
      if (!ok) res.code = kCheckFailed;
    } else if (name == "minimal") {
      const auto mi = minimal_invariant(gd);
      j = detail::header(p);
      j["series"] = Json::array({Json{{"q", mi.chi_min}}});
      j["series"][0].update(to_json(mi.value));
      j["meta"] = Json{{"chi_min", mi.chi_min}, {"e", mi.e}, {"epsilon", mi.epsilon}};
      text << "chi_min=" << mi.chi_min << " e=" << mi.e << " epsilon=" << mi.epsilon << " value=" << mi.value.to_string()
           << "\n";
    } else if (name == "max-subbundles") {
      const BigInt c = segre_count(p.genus);
      j = Json{{"genus", p.genus}, {"count", c.get_str()}};
      text << c.get_str() << "\n";
    } else if (name == "macmahon") {
      require(p.order >= 0, "--order must be nonnegative");
      const QSeries m = macmahon(p.order);
      j = Json{{"series", to_json(m)}, {"meta", Json{{"order", p.order}}}};
      text << m.to_string() << "\n";
    } else if (name == "zdt0") {
      require(p.order >= 0, "--order must be nonnegative");
      const QSeries z = zdt0(gd, p.order);
      j = detail::header(p);
      j["series"] = to_json(z);
      j["meta"] = Json{{"order", p.order}, {"exponent", 8 * p.genus - 8 - p.degree}};
      text << z.to_string() << "\n";
    }

    std::string rendered = json ? render(j) : text.str();
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + out_path);
      f << rendered;
    } else {
      res.out = std::move(rendered);
    }
  } catch (const detail::UsageError& e) {
    res.code = kUsage;
    res.out.clear();
    res.err = std::string("error: ") + e.what() + "\n\n" + app.help();
  } catch (const std::exception& e) {
    res.code = kContract;
    res.out.clear();
    res.err = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

/// Reads the default format from the environment.
inline std::optional<std::string> env_format() {
  if (const char* v = std::getenv(kFormatEnv); v && *v) return std::string(v);
  return std::nullopt;
}

}  // namespace quotpt::cli
