// Command-line front end: individual invariant computations and verification
// sweeps with machine-readable output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <thread>

#include "seifertk/json_io.hpp"
#include "seifertk/verify.hpp"

using namespace sfk;
using json = nlohmann::ordered_json;

namespace {

enum class Format { json_fmt, csv, tex, plain };

Format parse_format(const std::string &s) {
  if (s == "json") return Format::json_fmt;
  if (s == "csv") return Format::csv;
  if (s == "tex") return Format::tex;
  if (s == "plain") return Format::plain;
  throw CLI::ValidationError("--format", "unknown format '" + s + "'");
}

// tabular payload for the csv/tex emitters; scalar results render key/value
struct Output {
  json j;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

std::string scalar_to_string(const json &v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const Output &out, Format fmt) {
  switch (fmt) {
  case Format::json_fmt:
    std::cout << out.j.dump(2) << "\n";
    return;
  case Format::plain:
    if (!out.rows.empty()) {
      for (const auto &row : out.rows) {
        for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? "  " : "") << row[i];
        std::cout << "\n";
      }
    } else {
      for (auto it = out.j.begin(); it != out.j.end(); ++it)
        std::cout << it.key() << " = " << scalar_to_string(it.value()) << "\n";
    }
    return;
  case Format::csv: {
    auto quote = [](const std::string &s) {
      if (s.find_first_of(",\"") == std::string::npos) return s;
      std::string q = "\"";
      for (char c : s) {
        if (c == '"') q += '"';
        q += c;
      }
      return q + "\"";
    };
    if (!out.rows.empty()) {
      for (size_t i = 0; i < out.headers.size(); ++i)
        std::cout << (i ? "," : "") << quote(out.headers[i]);
      std::cout << "\n";
      for (const auto &row : out.rows) {
        for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << quote(row[i]);
        std::cout << "\n";
      }
    } else {
      std::cout << "key,value\n";
      for (auto it = out.j.begin(); it != out.j.end(); ++it)
        std::cout << quote(it.key()) << "," << quote(scalar_to_string(it.value())) << "\n";
    }
    return;
  }
  case Format::tex: {
    if (!out.rows.empty()) {
      std::cout << "\\begin{tabular}{|";
      for (size_t i = 0; i < out.headers.size(); ++i) std::cout << "c|";
      std::cout << "}\n\\hline\n";
      for (size_t i = 0; i < out.headers.size(); ++i)
        std::cout << (i ? " & " : "") << "$" << out.headers[i] << "$";
      std::cout << " \\\\ \\hline\\hline\n";
      for (const auto &row : out.rows) {
        for (size_t i = 0; i < row.size(); ++i)
          std::cout << (i ? " & " : "") << "$" << row[i] << "$";
        std::cout << " \\\\ \\hline\n";
      }
      std::cout << "\\end{tabular}\n";
    } else {
      for (auto it = out.j.begin(); it != out.j.end(); ++it)
        std::cout << "$" << it.key() << " = " << scalar_to_string(it.value()) << "$\\\\\n";
    }
    return;
  }
  }
}

std::vector<long long> parse_ll_list(const std::string &s) {
  std::vector<long long> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(std::stoll(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

// accepts both "2,3,11" and the display syntax "sigma(2,3,11)"
SeifertData parse_seifert(const std::string &raw) {
  std::string s = raw;
  if (s.rfind("sigma(", 0) == 0 && s.back() == ')') s = s.substr(6, s.size() - 7);
  return SeifertData(parse_ll_list(s));
}

// bundles written as "(e;e1,e2,...)" or "e;e1,e2,..."
LineBundleData parse_bundle(const std::string &raw) {
  std::string s = raw;
  if (!s.empty() && s.front() == '(') s = s.substr(1, s.size() - 2);
  size_t semi = s.find(';');
  if (semi == std::string::npos) throw error("bundle syntax is (e;eps1,eps2,...)");
  LineBundleData E;
  E.e = std::stoll(s.substr(0, semi));
  E.epsilons = parse_ll_list(s.substr(semi + 1));
  return E;
}

BrieskornFamily parse_family(const std::string &s) {
  if (s == "12n+5") return BrieskornFamily::plus5;
  if (s == "12n-5") return BrieskornFamily::minus5;
  if (s == "12n-1") return BrieskornFamily::minus1;
  if (s == "12n+1") return BrieskornFamily::plus1;
  throw CLI::ValidationError("--family", "expected one of 12n+5, 12n-5, 12n-1, 12n+1");
}

// fixed points "a,b;a,b;..." and surfaces "c,s;c,s;..."
FixedPointData parse_fixed_data(long long p, const std::string &pts, const std::string &surf) {
  std::vector<FixedPoint> points;
  std::vector<FixedSurface> surfaces;
  auto split_semi = [](const std::string &s) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos < s.size()) {
      size_t semi = s.find(';', pos);
      if (semi == std::string::npos) semi = s.size();
      if (semi > pos) parts.push_back(s.substr(pos, semi - pos));
      pos = semi + 1;
    }
    return parts;
  };
  for (const auto &part : split_semi(pts)) {
    auto vals = parse_ll_list(part);
    if (vals.size() != 2) throw error("each fixed point is 'a,b'");
    points.push_back({vals[0], vals[1]});
  }
  for (const auto &part : split_semi(surf)) {
    auto vals = parse_ll_list(part);
    if (vals.size() != 2) throw error("each fixed surface is 'c,selfint'");
    surfaces.push_back({vals[0], vals[1]});
  }
  return FixedPointData(p, points, surfaces);
}

json poset_to_json(const PosetVector &v) {
  json arr = json::array();
  for (const auto &e : v.entries) arr.push_back(e.to_string());
  return arr;
}

unsigned resolve_threads(unsigned requested) {
  if (const char *env = std::getenv("SEIFERT_KAPPA_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact invariants of Seifert-fibered homology spheres and smoothability "
               "obstructions for Z/p actions"};
  app.require_subcommand(1);
  app.fallthrough(); // allow global flags after the subcommand name
  std::string format_str = "json";
  app.add_option("--format", format_str, "output format: json, csv, tex, plain")
      ->capture_default_str();

  // --- sum ---------------------------------------------------------------
  auto *sum_cmd = app.add_subcommand("sum", "evaluate one of the four Dedekind-type sums");
  std::string sum_family, sum_method = "reciprocity", sum_x = "0", sum_y = "0";
  long long sum_b = 0, sum_a = 1, sum_q = 1, sum_r = 1, sum_p = 2;
  int sum_eps = -1;
  sum_cmd->add_option("--family", sum_family, "dedekind, rademacher, dieter or cosecant")
      ->required();
  sum_cmd->add_option("--method", sum_method, "brute or reciprocity")->capture_default_str();
  sum_cmd->add_option("--b", sum_b, "numerator-side parameter b");
  sum_cmd->add_option("--a", sum_a, "modulus-side parameter a");
  sum_cmd->add_option("--x", sum_x, "shift x (rational)");
  sum_cmd->add_option("--y", sum_y, "shift y (rational)");
  sum_cmd->add_option("--q", sum_q, "cosecant q");
  sum_cmd->add_option("--r", sum_r, "cosecant r");
  sum_cmd->add_option("--p", sum_p, "cosecant p");
  sum_cmd->add_option("--eps", sum_eps, "cosecant sign character (+1 or -1)");

  // --- eta-sign ----------------------------------------------------------
  auto *eta_cmd = app.add_subcommand("eta-sign", "equivariant signature eta invariant");
  std::string eta_seifert;
  long long eta_r = 0, eta_q = 1;
  eta_cmd->add_option("--seifert", eta_seifert, "fiber multiplicities, e.g. 2,3,59")->required();
  eta_cmd->add_option("--r", eta_r, "order of the action")->required();
  eta_cmd->add_option("--q", eta_q, "power of the generator")->capture_default_str();

  // --- alpha -------------------------------------------------------------
  auto *alpha_cmd = app.add_subcommand("alpha", "alpha invariant of a homology lens space");
  std::string alpha_seifert, alpha_lens;
  long long alpha_r = 0;
  alpha_cmd->add_option("--seifert", alpha_seifert, "Seifert quotient: fibers, with --r");
  alpha_cmd->add_option("--r", alpha_r, "order of the action");
  alpha_cmd->add_option("--lens", alpha_lens, "generalized lens space p,a,b");

  // --- correction ----------------------------------------------------------
  auto *corr_cmd = app.add_subcommand("correction", "equivariant correction terms n_L");
  std::string corr_seifert, corr_L;
  long long corr_r = 0;
  bool corr_all = false;
  corr_cmd->add_option("--seifert", corr_seifert, "fiber multiplicities")->required();
  corr_cmd->add_option("--r", corr_r, "order of the action")->required();
  corr_cmd->add_option("--L", corr_L, "level L (rational, e.g. 5/2)");
  corr_cmd->add_flag("--all", corr_all, "emit the full correction vector");

  // --- rotation ------------------------------------------------------------
  auto *rot_cmd = app.add_subcommand("rotation", "rotation numbers of irreducible components");
  std::string rot_family, rot_seifert, rot_bundle;
  long long rot_n = 1;
  rot_cmd->add_option("--family", rot_family, "Brieskorn family (12n-1, ...)");
  rot_cmd->add_option("--n", rot_n, "family level n");
  rot_cmd->add_option("--seifert", rot_seifert, "explicit fibration fibers");
  rot_cmd->add_option("--bundle", rot_bundle, "line bundle (e;eps1,...,epsn)");

  // --- kappa ---------------------------------------------------------------
  auto *kappa_cmd = app.add_subcommand("kappa", "equivariant kappa-invariant sets");
  std::string kappa_family, kappa_side = "plus";
  long long kappa_n = 1, kappa_p = 5;
  kappa_cmd->add_option("--family", kappa_family, "Brieskorn family")->required();
  kappa_cmd->add_option("--n", kappa_n, "family level")->required();
  kappa_cmd->add_option("--p", kappa_p, "odd prime p")->required();
  kappa_cmd->add_option("--side", kappa_side, "plus or minus orientation")->capture_default_str();

  // --- sigma -----------------------------------------------------------------
  auto *sigma_cmd = app.add_subcommand("sigma", "signature-defect vector of fixed-point data");
  std::string sigma_points, sigma_surfaces;
  long long sigma_p = 5, sigma_sig = 0;
  sigma_cmd->add_option("--p", sigma_p, "odd prime p")->required();
  sigma_cmd->add_option("--points", sigma_points, "isolated points a,b;a,b;...");
  sigma_cmd->add_option("--surfaces", sigma_surfaces, "surfaces c,selfint;...");
  sigma_cmd->add_option("--sigma-x", sigma_sig, "signature of the 4-manifold");

  // --- check-extension -------------------------------------------------------
  auto *check_cmd =
      app.add_subcommand("check-extension", "smooth-extension verdict for catalog manifolds");
  std::string check_manifold;
  long long check_n = 1, check_p = 5, check_fiber = 0;
  bool check_stab = false;
  check_cmd->add_option("--manifold", check_manifold, "N, P or M")->required();
  check_cmd->add_option("--n", check_n, "level n for N/P families");
  check_cmd->add_option("--fiber", check_fiber, "third fiber for M(2,3,fiber)");
  check_cmd->add_option("--p", check_p, "odd prime p")->required();
  check_cmd->add_flag("--stab", check_stab, "use the once-stabilized manifold");

  // --- stab-bound -------------------------------------------------------------
  auto *stab_cmd = app.add_subcommand("stab-bound", "certified free-stabilization bounds");
  std::string stab_family;
  long long stab_n = 1, stab_p = 5;
  stab_cmd->add_option("--family", stab_family, "N or P")->required();
  stab_cmd->add_option("--n", stab_n, "level n")->required();
  stab_cmd->add_option("--p", stab_p, "prime p >= 5")->required();

  // --- h-cob ---------------------------------------------------------------
  auto *hcob_cmd = app.add_subcommand("h-cob", "Z[Z/p] h-cobordism criterion");
  std::string hcob_seifert, hcob_lens;
  long long hcob_p = 5;
  hcob_cmd->add_option("--seifert", hcob_seifert, "Brieskorn triple")->required();
  hcob_cmd->add_option("--p", hcob_p, "order p")->required();
  hcob_cmd->add_option("--lens", hcob_lens, "lens weights a,b")->required();

  // --- e8-data ---------------------------------------------------------------
  auto *e8_cmd = app.add_subcommand("e8-data", "fixed-point data of the E8 construction");
  long long e8_p = 5;
  e8_cmd->add_option("--p", e8_p, "prime p >= 5")->required();

  // --- verify ---------------------------------------------------------------
  auto *verify_cmd = app.add_subcommand("verify", "run a named verification suite");
  std::string verify_suite, verify_p = "5,7,11,13", verify_n = "1,2";
  unsigned verify_threads = 0;
  verify_cmd->add_option("suite", verify_suite,
                         "correction-terms, cosecant-tables, alpha-equality, rotation-table, "
                         "comparing, e8, reciprocity, or 'all'")
      ->required();
  verify_cmd->add_option("--p", verify_p, "comma-separated primes")->capture_default_str();
  verify_cmd->add_option("--n", verify_n, "comma-separated levels")->capture_default_str();
  verify_cmd->add_option("--threads", verify_threads, "sweep parallelism (default: cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Format fmt = parse_format(format_str);
    Output out;

    if (sum_cmd->parsed()) {
      SumMethod m = sum_method == "brute" ? SumMethod::brute : SumMethod::reciprocity;
      out.j["family"] = sum_family;
      out.j["method"] = sum_method;
      if (sum_family == "dedekind") {
        out.j["b"] = sum_b;
        out.j["a"] = sum_a;
        out.j["value"] = dedekind_sum(sum_b, sum_a, m).to_string();
      } else if (sum_family == "rademacher") {
        DedekindRademacherSpec s{sum_b, sum_a, Rational::from_string(sum_x),
                                 Rational::from_string(sum_y)};
        out.j["b"] = sum_b;
        out.j["a"] = sum_a;
        out.j["x"] = s.x.to_string();
        out.j["y"] = s.y.to_string();
        out.j["value"] = dedekind_rademacher(s, m).to_string();
      } else if (sum_family == "dieter") {
        DedekindDieterSpec s{sum_b, sum_a, Rational::from_string(sum_x),
                             Rational::from_string(sum_y)};
        out.j["b"] = sum_b;
        out.j["a"] = sum_a;
        out.j["x"] = s.x.to_string();
        out.j["y"] = s.y.to_string();
        Cyclotomic v = dedekind_dieter(s, m);
        out.j["value"] = v.is_rational() ? json(v.as_rational().to_string())
                                         : json(to_json_with_approx(v));
      } else if (sum_family == "cosecant") {
        CosecantSumSpec s{sum_q, sum_r, sum_p, sum_eps};
        out.j["q"] = sum_q;
        out.j["r"] = sum_r;
        out.j["p"] = sum_p;
        out.j["eps"] = sum_eps;
        out.j["value"] = cosecant_sum(s, m).to_string();
      } else {
        throw error("unknown sum family '" + sum_family + "'");
      }
    } else if (eta_cmd->parsed()) {
      SeifertData Y = parse_seifert(eta_seifert);
      out.j["seifert"] = Y.to_string();
      out.j["r"] = eta_r;
      out.j["q"] = eta_q;
      out.j["value"] = to_json_with_approx(eta_sign(Y, eta_r, eta_q));
    } else if (alpha_cmd->parsed()) {
      Cyclotomic v;
      if (!alpha_lens.empty()) {
        auto vals = parse_ll_list(alpha_lens);
        if (vals.size() != 3) throw error("--lens wants p,a,b");
        LensSpaceData L(vals[0], vals[1], vals[2]);
        out.j["lens"] = alpha_lens;
        v = alpha_invariant_lens(L);
      } else {
        if (alpha_seifert.empty() || alpha_r == 0)
          throw error("alpha needs --lens or --seifert with --r");
        SeifertData Y = parse_seifert(alpha_seifert);
        out.j["seifert"] = Y.to_string();
        out.j["r"] = alpha_r;
        v = alpha_invariant_seifert(Y, alpha_r);
      }
      out.j["value"] = v.is_rational() ? json(v.as_rational().to_string())
                                       : json(to_json_with_approx(v));
    } else if (corr_cmd->parsed()) {
      SeifertData Y = parse_seifert(corr_seifert);
      out.j["seifert"] = Y.to_string();
      out.j["r"] = corr_r;
      if (corr_all || corr_L.empty()) {
        CorrectionVector v = correction_vector(Y, corr_r);
        json entries = json::object();
        out.headers = {"L", "n_L"};
        for (const auto &[L, val] : v.entries) {
          entries[L.to_string()] = val.to_string();
          out.rows.push_back({L.to_string(), val.to_string()});
        }
        out.j["entries"] = entries;
        out.j["total"] = v.total().to_string();
      } else {
        Rational L = Rational::from_string(corr_L);
        out.j["L"] = L.to_string();
        out.j["value"] = correction_term(Y, corr_r, L).to_string();
      }
    } else if (rot_cmd->parsed()) {
      if (!rot_family.empty()) {
        BrieskornFamily f = parse_family(rot_family);
        auto comps = brieskorn_components(f, rot_n);
        out.j["family"] = family_name(f);
        out.j["n"] = rot_n;
        out.j["Y"] = brieskorn(f, rot_n).to_string();
        out.headers = {"Y", "E", "rot(E)"};
        json arr = json::array();
        for (const auto &[E, r] : comps) {
          std::string bundle = "(0;0,0," + std::to_string(E.epsilons[2]) + ")";
          arr.push_back({{"E", bundle}, {"rot", r.to_string()}});
          out.rows.push_back({brieskorn(f, rot_n).to_string(), bundle, r.to_string()});
        }
        out.j["components"] = arr;
      } else {
        SeifertData Y = parse_seifert(rot_seifert);
        LineBundleData E = parse_bundle(rot_bundle);
        out.j["seifert"] = Y.to_string();
        out.j["bundle"] = rot_bundle;
        Rational r = rotation_number(Y, E);
        out.j["rot"] = r.to_string();
        out.j["csd_normalized"] = csd_from_rotation(r, Rational(-1, Y.alpha())).to_string();
      }
    } else if (kappa_cmd->parsed()) {
      BrieskornFamily f = parse_family(kappa_family);
      bool minus = kappa_side == "minus";
      KappaSet K = kappa_set(f, kappa_n, kappa_p, minus);
      out.j["family"] = family_name(f);
      out.j["n"] = kappa_n;
      out.j["p"] = kappa_p;
      out.j["side"] = minus ? "minus" : "plus";
      out.j["grading"] = K.grading().to_string();
      out.j["multiple"] = has_multiple_elements(f, kappa_n, kappa_p, minus);
      json reps = json::array(), proj = json::array();
      for (const auto &r : K.representatives) reps.push_back(poset_to_json(r));
      for (const auto &r : K.projected) proj.push_back(poset_to_json(r));
      out.j["representatives"] = reps;
      out.j["projected"] = proj;
      if (!K.bound.empty()) out.j["bound"] = K.bound;
    } else if (sigma_cmd->parsed()) {
      FixedPointData d = parse_fixed_data(sigma_p, sigma_points, sigma_surfaces);
      out.j["p"] = sigma_p;
      out.j["sigma_x"] = sigma_sig;
      out.j["data"] = d.to_string();
      auto v = sigma_vector(d, sigma_sig);
      json arr = json::array();
      for (const auto &x : v) arr.push_back(x.to_string());
      out.j["vector"] = arr;
      if (d.pseudofree())
        out.j["S0_via_cosecant"] = sigma0_via_cosecant(d, sigma_sig).to_string();
    } else if (check_cmd->parsed()) {
      ManifoldCatalogEntry e;
      bool has_stab_bound = true;
      if (check_manifold == "N") {
        e = catalog::nucleus(check_n, check_stab);
      } else if (check_manifold == "P") {
        e = catalog::plumbing(check_n, check_stab);
      } else if (check_manifold == "M") {
        if (check_fiber == 0) throw error("M needs --fiber");
        e = catalog::milnor(check_fiber);
        has_stab_bound = false;
      } else {
        throw error("--manifold must be N, P or M");
      }
      auto [sharp, C] = sharpness(e);
      bool multiple =
          has_multiple_elements(e.boundary_family, e.boundary_n, check_p, e.boundary_minus);
      out.j["manifold"] = e.name;
      out.j["p"] = check_p;
      out.j["n"] = e.boundary_n;
      out.j["sharp"] = sharp;
      long long mult_count = 1;
      if (multiple) {
        if (e.boundary_minus) {
          long long x0 = (e.boundary_family == BrieskornFamily::minus5)
                             ? count_A(e.boundary_n, check_p, 0)
                             : count_B(e.boundary_n, check_p, 0);
          mult_count = e.boundary_n - x0 + 1;
        } else {
          mult_count = 2;
        }
      }
      out.j["kappa_multiplicity"] = mult_count;
      out.j["verdict"] = verdict_name(nonextension_verdict(e, check_p)
                                          ? Verdict::excluded
                                          : Verdict::not_excluded);
      if (has_stab_bound && check_p >= 5)
        out.j["max_certified_free_stabilizations"] =
            min_free_stabilizations(check_manifold == "N" ? StabilizationFamily::nucleus
                                                          : StabilizationFamily::plumbing,
                                    check_n, check_p)
                .certified;
      else
        out.j["max_certified_free_stabilizations"] = nullptr;
    } else if (stab_cmd->parsed()) {
      StabilizationFamily f = stab_family == "P" ? StabilizationFamily::plumbing
                                                 : StabilizationFamily::nucleus;
      auto b = min_free_stabilizations(f, stab_n, stab_p);
      out.j["family"] = stab_family;
      out.j["n"] = stab_n;
      out.j["p"] = stab_p;
      out.j["certified"] = b.certified;
      out.j["smoothable_only_if"] = b.smoothable_only_if;
    } else if (hcob_cmd->parsed()) {
      SeifertData Y = parse_seifert(hcob_seifert);
      auto vals = parse_ll_list(hcob_lens);
      if (vals.size() != 2) throw error("--lens wants a,b");
      LensSpaceData L(hcob_p, vals[0], vals[1]);
      HCobordismReport rep = h_cobordism_check(Y, hcob_p, L);
      out.j["seifert"] = Y.to_string();
      out.j["p"] = hcob_p;
      out.j["lens"] = hcob_lens;
      out.j["product_congruence"] = rep.product_congruence;
      out.j["triple_congruence"] = rep.triple_congruence;
      out.j["alpha_equal"] = rep.alpha_equal;
      out.j["h_cobordant"] = rep.ok();
    } else if (e8_cmd->parsed()) {
      long long pairs = 0;
      FixedPointData d = e8_fixed_point_data(e8_p, &pairs);
      out.j["p"] = e8_p;
      out.j["cancelling_pairs"] = pairs;
      json pts = json::array();
      for (auto [a, b] : d.canonical_points()) pts.push_back({a, b});
      out.j["points"] = pts;
      out.j["data"] = d.to_string();
    } else if (verify_cmd->parsed()) {
      VerifyOptions opt;
      opt.primes = parse_ll_list(verify_p);
      opt.levels = parse_ll_list(verify_n);
      opt.threads = resolve_threads(verify_threads);
      std::vector<std::string> suites;
      if (verify_suite == "all")
        suites = verify_suite_names();
      else
        suites = {verify_suite};
      bool all_pass = true;
      json results = json::array();
      out.headers = {"suite", "fixture", "status", "detail"};
      for (const auto &suite : suites) {
        for (const auto &r : run_verify_suite(suite, opt)) {
          results.push_back({{"suite", suite},
                             {"fixture", r.name},
                             {"pass", r.pass},
                             {"detail", r.detail}});
          out.rows.push_back({suite, r.name, r.pass ? "PASS" : "FAIL", r.detail});
          if (!r.pass) all_pass = false;
        }
      }
      out.j["results"] = results;
      out.j["all_pass"] = all_pass;
      emit(out, fmt);
      return all_pass ? 0 : 1;
    }

    emit(out, fmt);
    return 0;
  } catch (const error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
