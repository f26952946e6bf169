#pragma once

/**
 * @file cli.hpp
 * @brief The canonical-bounds command line: bounds, miyaoka, nagata,
 * figure1, vojta, seshadri.
 *
 * run() is the whole program; main() only forwards argv. Exit codes:
 * 0 success, 1 mathematical impossibility, 2 usage, 3 budget, 4 I/O.
 */

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "canonical_bounds/canonical_bounds.hpp"
#include "figure1.hpp"
#include "render.hpp"

namespace cbounds::cli {

enum exit_code : int { ok = 0, impossible = 1, usage = 2, budget = 3, io = 4 };

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer parse_integer(const std::string& flag, const std::string& text) {
  static const std::regex pattern(R"(^\s*[+-]?\d+\s*$)");
  if (!std::regex_match(text, pattern)) throw usage_error(flag + ": expected an integer, got '" + text + "'");
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s);
}

inline Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const bounds_error&) {
    throw usage_error(flag + ": expected an integer or p/q, got '" + text + "'");
  }
}

inline std::int64_t parse_count(const std::string& flag, const std::string& text, std::int64_t min_value) {
  const Integer v = parse_integer(flag, text);
  if (v < min_value || v > Integer(std::numeric_limits<std::int32_t>::max()))
    throw usage_error(flag + " must be at least " + std::to_string(min_value));
  return static_cast<std::int64_t>(v);
}

/// Worker count from CANONICAL_BOUNDS_WORKERS, 0 (machine default) if unset.
inline unsigned workers_from_env() {
  const char* env = std::getenv("CANONICAL_BOUNDS_WORKERS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    const long v = std::stol(env);
    if (v >= 1 && v <= 4096) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw usage_error(std::string("CANONICAL_BOUNDS_WORKERS must be a positive integer, got '") + env + "'");
}

// ---------------------------------------------------------------------------
// Commands. Each builds a Document; run() renders it.
// ---------------------------------------------------------------------------

struct BoundsArgs {
  std::optional<std::string> g, a, eps, beta, x0;
};

inline Document cmd_bounds(const BoundsArgs& args) {
  if (!args.a) throw usage_error("bounds: --a is required");
  const bool positive = args.beta || args.x0;
  if (positive && !(args.beta && args.x0)) throw usage_error("bounds: --beta and --x0 go together");
  if (!args.g && !positive) throw usage_error("bounds: --g is required (or --beta with --x0)");
  if (args.eps && !args.g) throw usage_error("bounds: --eps needs --g");

  Document doc;
  doc.command = "bounds";
  const Integer a = parse_integer("--a", *args.a);
  std::optional<Rational> eps;
  if (args.eps) eps = parse_rational_flag("--eps", *args.eps);
  if (args.g) doc.inputs.add("g", parse_integer("--g", *args.g));
  doc.inputs.add("a", a);
  if (eps) doc.inputs.add("eps", *eps);

  auto emit = [&](const BoundReport& r, std::string relation) {
    Record rec;
    rec.add("formula_id", std::string(to_string(r.formula)));
    rec.add("relation", std::move(relation));
    rec.add("bound", r.bound);
    rec.add("floor", r.bound_floor);
    doc.results.push_back(std::move(rec));
    doc.refs.emplace_back(to_string(r.formula));
  };

  if (args.g) {
    const Integer g = parse_integer("--g", *args.g);
    for (const auto& r : negative_curve_reports(g, a, eps)) {
      emit(r, std::string(bound_subject(r.formula)));
      if (r.formula == FormulaId::EQ3) {
        BoundReport lin = r;
        lin.bound = beta_bound(a).linear;
        lin.bound_floor = lin.bound.floor();
        emit(lin, "beta_C <= (linear)");
        doc.refs.pop_back();
      }
    }
  }
  if (positive) {
    const Rational beta = parse_rational_flag("--beta", *args.beta);
    const Rational x0 = parse_rational_flag("--x0", *args.x0);
    doc.inputs.add("beta", beta);
    doc.inputs.add("x0", x0);
    for (const auto& r : positive_curve_reports(beta, x0, a)) emit(r, std::string(bound_subject(r.formula)));
  }
  return doc;
}

struct MiyaokaArgs {
  std::optional<std::string> g, C2, k, pa, c2, K2, a, alpha;
};

inline Document cmd_miyaoka(const MiyaokaArgs& args) {
  if (!args.g || !args.C2 || !args.k) throw usage_error("miyaoka: --g, --C2 and --k are required");
  const bool chern = args.c2 || args.K2;
  if (chern && !(args.c2 && args.K2)) throw usage_error("miyaoka: --c2 and --K2 go together");
  if (!chern && !args.a) throw usage_error("miyaoka: give --a or both --c2 and --K2");

  const Integer g = parse_integer("--g", *args.g);
  const Integer C2 = parse_integer("--C2", *args.C2);
  const Integer k = parse_integer("--k", *args.k);
  const CurveNumerics curve = args.pa ? CurveNumerics(g, parse_integer("--pa", *args.pa), C2, k) : CurveNumerics(g, C2, k);

  std::optional<SurfaceInvariants> surface;
  Integer a;
  if (chern) {
    surface.emplace(parse_integer("--c2", *args.c2), parse_integer("--K2", *args.K2), Kodaira::zero);
    a = surface->a();
    if (args.a && parse_integer("--a", *args.a) != a) throw usage_error("miyaoka: --a disagrees with 3 c2 - K2");
  } else {
    a = parse_integer("--a", *args.a);
    if (a < 0) cbounds::detail::fail(errc::invalid_class, "a < 0 is impossible when kappa >= 0");
  }

  Document doc;
  doc.command = "miyaoka";
  doc.inputs.add("g", g).add("pa", curve.pa()).add("C2", C2).add("k", k).add("a", a);
  if (surface) doc.inputs.add("c2", surface->c2()).add("K2", surface->K2());

  Record m1;
  m1.add("predicate", std::string("M1"));
  m1.add("value", m1_minimum(curve, a));
  m1.add("aux", std::string("min over alpha in [0,1]"));
  m1.add("holds", m1_holds_for_all_alpha(curve, a));
  doc.results.push_back(std::move(m1));
  doc.refs.emplace_back("M1");

  if (args.alpha) {
    const Rational alpha = parse_rational_flag("--alpha", *args.alpha);
    const Rational v = m1_value(curve, a, alpha);
    Record r;
    r.add("predicate", std::string("M1_AT_ALPHA")).add("value", v).add("aux", "alpha=" + to_string(alpha)).add("holds", v >= 0);
    doc.results.push_back(std::move(r));
  }

  Record bis;
  bis.add("predicate", std::string("M1BIS"));
  if (curve.kC() > 3 * (curve.g() - 1)) {
    const Integer v = m1bis_value(curve, a);
    bis.add("value", v).add("aux", std::string("must be <= 0")).add("holds", v <= 0);
  } else {
    bis.add("value", std::monostate{}).add("aux", std::string("not applicable: k <= 3(g-1)")).add("holds", std::monostate{});
  }
  doc.results.push_back(std::move(bis));
  doc.refs.emplace_back("M1BIS");

  if (surface && surface->K2() > 0) {
    const auto sides = m2_sides(curve, *surface);
    Record m2;
    m2.add("predicate", std::string("M2")).add("value", sides.left).add("aux", "right=" + to_string(sides.right)).add("holds", sides.holds());
    doc.results.push_back(std::move(m2));
    doc.refs.emplace_back("M2");
  }
  return doc;
}

/// Column set of the scan CSV.
inline const std::vector<std::string>& nagata_columns() {
  static const std::vector<std::string> cols = {"n",  "beta0", "d",   "m",         "D2",             "KD",    "pa",
                                                "M",  "lhs",   "rhs", "in_region", "vs_nagata_line", "vs_roe"};
  return cols;
}

inline Record region_record(const RegionReport& r, const Rational& beta0) {
  Record rec;
  std::string m;
  if (r.homogeneous) {
    m = r.m.front().str();
  } else {
    for (std::size_t i = 0; i < r.m.size(); ++i) m += (i ? " " : "") + r.m[i].str();
  }
  rec.add("n", Integer(r.n)).add("beta0", beta0).add("d", r.d).add("m", m);
  rec.add("D2", r.D2).add("KD", r.KD).add("pa", r.pa).add("M", r.M);
  rec.add("lhs", r.lhs).add("rhs", r.rhs).add("in_region", r.in_region);
  rec.add("vs_nagata_line", std::string(to_string(r.vs_nagata_line)));
  rec.add("vs_roe", r.vs_roe ? Value(std::string(to_string(*r.vs_roe))) : Value(std::string()));
  return rec;
}

struct ScanArgs {
  std::optional<std::string> n, beta0, mmax, dmax, eps_n, budget;
  std::string mode = "homogeneous";
};

/// Throws scan_budget_error; `partial` receives the document built so far.
inline Document cmd_nagata_scan(const ScanArgs& args, unsigned workers) {
  if (!args.n || !args.beta0 || !args.mmax || !args.dmax)
    throw usage_error("nagata scan: --n, --beta0, --mmax and --dmax are required");
  ScanConfig cfg;
  cfg.n = parse_count("--n", *args.n, 1);
  cfg.beta0 = parse_rational_flag("--beta0", *args.beta0);
  if (cfg.beta0 <= 3) throw usage_error("--beta0 must exceed 3");
  cfg.m_max = parse_count("--mmax", *args.mmax, 1);
  cfg.d_max = parse_count("--dmax", *args.dmax, 1);
  if (args.mode == "homogeneous") cfg.mode = ScanMode::HOMOGENEOUS;
  else if (args.mode == "general") cfg.mode = ScanMode::GENERAL_SORTED;
  else throw usage_error("--mode must be homogeneous or general");
  if (args.eps_n) {
    cfg.eps_n = parse_rational_flag("--eps-n", *args.eps_n);
    if (*cfg.eps_n <= 0) throw usage_error("--eps-n must be positive");
  }
  if (args.budget) cfg.budget = static_cast<std::uint64_t>(parse_count("--budget", *args.budget, 1));
  cfg.workers = workers;

  Document doc;
  doc.command = "nagata scan";
  doc.inputs.add("n", Integer(cfg.n)).add("beta0", cfg.beta0).add("mmax", Integer(cfg.m_max)).add("dmax", Integer(cfg.d_max));
  doc.inputs.add("mode", args.mode);
  if (cfg.eps_n) doc.inputs.add("eps_n", *cfg.eps_n);
  doc.refs = {"NAGATA_REGION", "HYPERBOLA"};
  if (cfg.eps_n) doc.refs.emplace_back("ROE_BOUND");
  for (const auto& r : scan(cfg)) doc.results.push_back(region_record(r, cfg.beta0));
  return doc;
}

struct CheckArgs {
  std::optional<std::string> cls, beta0, eps_n;
};

inline Document cmd_nagata_check(const CheckArgs& args) {
  if (!args.cls || !args.beta0) throw usage_error("nagata check: --class and --beta0 are required");
  DivisorClass D;
  try {
    D = DivisorClass::parse(*args.cls);
  } catch (const bounds_error& e) {
    throw usage_error(std::string("--class: ") + e.what());
  }
  if (D.d() <= 0) throw usage_error("--class: degree must be positive");
  const Rational beta0 = parse_rational_flag("--beta0", *args.beta0);
  if (beta0 <= 3) throw usage_error("--beta0 must exceed 3");
  ScanConfig cfg;
  cfg.n = static_cast<std::int64_t>(D.n());
  cfg.beta0 = beta0;
  if (args.eps_n) cfg.eps_n = parse_rational_flag("--eps-n", *args.eps_n);

  Document doc;
  doc.command = "nagata check";
  doc.inputs.add("class", D.to_string()).add("beta0", beta0);
  if (cfg.eps_n) doc.inputs.add("eps_n", *cfg.eps_n);
  doc.refs = {"NAGATA_REGION"};

  const Integer D2 = self_intersection(D);
  RegionReport r = cbounds::detail::build_report(cfg, D.d(), D.m(), false, D.multiplicity_sum(), D.d() * D.d() - D2);
  r.in_region = nagata_region_member(D, beta0);
  Record rec = region_record(r, beta0);
  if (cfg.eps_n) {
    rec.add("sesh_region", sesh_region_member(D, beta0, *cfg.eps_n));
    rec.add("roe_bound", roe_bound(Integer(cfg.n), *cfg.eps_n));
    doc.refs.emplace_back("ROE_BOUND");
  }
  doc.results.push_back(std::move(rec));
  return doc;
}

struct CoverArgs {
  std::optional<std::string> gd, eta_d, kd, beta0;
};

inline Document cmd_nagata_cover(const CoverArgs& args) {
  if (!args.gd || !args.eta_d) throw usage_error("nagata cover: --gd and --eta-d are required");
  if (static_cast<bool>(args.kd) != static_cast<bool>(args.beta0)) throw usage_error("nagata cover: --kd and --beta0 go together");
  const Integer gd = parse_integer("--gd", *args.gd);
  const Integer eta = parse_integer("--eta-d", *args.eta_d);
  Document doc;
  doc.command = "nagata cover";
  doc.inputs.add("gd", gd).add("eta_d", eta);
  Record rec;
  rec.add("quantity", std::string("pullback_genus")).add("value", double_cover_genus(gd, eta));
  doc.results.push_back(std::move(rec));
  doc.refs.emplace_back("HURWITZ_DOUBLE_COVER");
  if (args.kd) {
    const Integer kd = parse_integer("--kd", *args.kd);
    const Rational beta0 = parse_rational_flag("--beta0", *args.beta0);
    if (beta0 <= 3) throw usage_error("--beta0 must exceed 3");
    doc.inputs.add("kd", kd).add("beta0", beta0);
    Record thr;
    thr.add("quantity", std::string("nongen_threshold"))
        .add("value", beta0 * Rational(gd - 1) + (beta0 - 2) / 2 * Rational(eta))
        .add("met", nongen_threshold_met(kd, gd, eta, beta0));
    doc.results.push_back(std::move(thr));
    doc.refs.emplace_back("NONGEN_THRESHOLD");
  }
  return doc;
}

struct VojtaArgs {
  std::optional<std::string> kl, l2, gamma, m, proj;
};

inline Document cmd_vojta(const VojtaArgs& args) {
  const bool surface = args.kl || args.l2 || args.gamma;
  if (surface && !(args.kl && args.l2 && args.gamma)) throw usage_error("vojta: --kl, --l2 and --gamma go together");
  if (!surface && !args.m) throw usage_error("vojta: give --kl/--l2/--gamma or --m");

  Document doc;
  doc.command = "vojta";
  auto row = [&](std::string quantity, std::optional<Integer> n, Value v) {
    Record r;
    r.add("quantity", std::move(quantity)).add("n", n ? Value(*n) : Value(std::monostate{})).add("value", std::move(v));
    doc.results.push_back(std::move(r));
  };

  if (surface) {
    const PolarizedSurface ps(parse_integer("--kl", *args.kl), parse_integer("--l2", *args.l2),
                              parse_integer("--gamma", *args.gamma));
    doc.inputs.add("kl", ps.KL()).add("l2", ps.L2()).add("gamma", ps.gamma());
    row("lambda_lower_bound", std::nullopt, lambda_lower(ps));
    doc.refs.emplace_back("LAMBDA_LOWER");
    if (args.proj) {
      doc.inputs.add("proj", *args.proj);
      std::stringstream ss(*args.proj);
      for (std::string item; std::getline(ss, item, ',');) {
        const Integer n = parse_integer("--proj", item);
        if (n < 1) throw usage_error("--proj values must be at least 1");
        row("projection_ratio", n, projection_ratio(ps, n));
      }
      doc.refs.emplace_back("PROJECTION_RATIO");
    }
  }
  if (args.m) {
    const Integer m = parse_integer("--m", *args.m);
    if (m < 1) throw usage_error("--m must be at least 1");
    doc.inputs.add("m", m);
    row("pluricanonical_lambda_lower_bound", std::nullopt, pluricanonical_lambda(m));
    doc.refs.emplace_back("PLURICANONICAL");
  }
  // conjectural reference lines, annotations only
  row("conjecture_reference_A", std::nullopt, std::string("4+eps"));
  row("conjecture_reference_A_strong", std::nullopt, std::string("2+eps"));
  return doc;
}

struct SeshadriArgs {
  std::optional<std::string> n, f;
};

inline Document cmd_seshadri(const SeshadriArgs& args) {
  if (!args.n) throw usage_error("seshadri: --n is required");
  const Integer n = parse_integer("--n", *args.n);
  if (n < 1) throw usage_error("--n must be at least 1");
  std::optional<Rational> f;
  if (args.f) f = parse_rational_flag("--f", *args.f);

  Document doc;
  doc.command = "seshadri";
  doc.inputs.add("n", n);
  if (f) doc.inputs.add("f", *f);

  std::vector<SeshadriEstimate> estimates{seshadri_conjectural(n)};
  if (n == 10) estimates.push_back(seshadri_lower(n));
  if (f) estimates.push_back(seshadri_lower(n, f));

  const Rational conj_sq(1, n);
  for (const auto& e : estimates) {
    Record r;
    const Rational sq = e.value().square_of_pure();
    r.add("source", std::string(to_string(e.source())));
    r.add("value", e.value());
    r.add("conjectural", e.conjectural());
    // value < 1/sqrt(n) iff value^2 < 1/n, i.e. n * value^2 < 1
    r.add("below_conjectural", e.conjectural() ? Value(std::monostate{}) : Value(sq < conj_sq));
    r.add("certificate", e.conjectural() ? std::string()
                                         : "n*value^2 = " + to_string(Rational(n) * sq) + (sq < conj_sq ? " < 1" : " >= 1"));
    doc.results.push_back(std::move(r));
    doc.refs.emplace_back(to_string(e.source()));
  }
  return doc;
}

// ---------------------------------------------------------------------------

inline Format parse_format(const std::string& s) {
  if (s == "table") return Format::TABLE;
  if (s == "json") return Format::JSON;
  if (s == "csv") return Format::CSV;
  if (s == "svg") return Format::SVG;
  throw usage_error("--format must be table, json, csv or svg");
}

inline void render(const Document& doc, Format fmt, std::ostream& os) {
  std::vector<std::string> cols;
  if (doc.command == "nagata scan") cols = nagata_columns();
  switch (fmt) {
    case Format::JSON: render_json(doc, os); break;
    case Format::CSV: render_csv(doc.results, os, cols); break;
    case Format::TABLE: render_table(doc, os, cols); break;
    case Format::SVG: throw usage_error("svg output is only available for figure1");
  }
}

/// Runs one command line; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact canonical-degree bounds, Nagata-region geometry and Seshadri estimates", "canonical-bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_text;
  std::string out_path;
  app.add_option("--format", format_text, "table|json|csv|svg");
  app.add_option("--out", out_path, "write output to PATH");

  BoundsArgs bounds;
  auto* sub_bounds = app.add_subcommand("bounds", "canonical-degree bounds for negative and positive curves");
  sub_bounds->add_option("--g", bounds.g, "geometric genus");
  sub_bounds->add_option("--a", bounds.a, "a = 3 c2 - K^2");
  sub_bounds->add_option("--eps", bounds.eps, "beta = 3 + eps (rational)");
  sub_bounds->add_option("--beta", bounds.beta, "beta > 3 for positive curves (rational)");
  sub_bounds->add_option("--x0", bounds.x0, "x0 > 1/2 for positive curves (rational)");

  MiyaokaArgs miyaoka;
  auto* sub_miyaoka = app.add_subcommand("miyaoka", "Miyaoka inequalities for a curve");
  sub_miyaoka->add_option("--g", miyaoka.g, "geometric genus");
  sub_miyaoka->add_option("--C2,--self-intersection", miyaoka.C2, "C^2");
  sub_miyaoka->add_option("--k", miyaoka.k, "canonical degree K.C");
  sub_miyaoka->add_option("--pa", miyaoka.pa, "arithmetic genus (checked against adjunction)");
  sub_miyaoka->add_option("--c2,--euler", miyaoka.c2, "c2 of the surface");
  sub_miyaoka->add_option("--K2", miyaoka.K2, "K^2 of the surface");
  sub_miyaoka->add_option("--a", miyaoka.a, "a = 3 c2 - K^2");
  sub_miyaoka->add_option("--alpha", miyaoka.alpha, "also evaluate the first inequality at alpha");

  auto* sub_nagata = app.add_subcommand("nagata", "finiteness region on the blown-up plane");
  sub_nagata->require_subcommand(1);
  ScanArgs scan_args;
  auto* sub_scan = sub_nagata->add_subcommand("scan", "enumerate classes against the region");
  sub_scan->add_option("--n", scan_args.n, "number of points");
  sub_scan->add_option("--beta0", scan_args.beta0, "threshold beta0 > 3");
  sub_scan->add_option("--mmax", scan_args.mmax, "largest multiplicity");
  sub_scan->add_option("--dmax", scan_args.dmax, "largest degree");
  sub_scan->add_option("--mode", scan_args.mode, "homogeneous|general");
  sub_scan->add_option("--eps-n", scan_args.eps_n, "Seshadri estimate for the Roe bound");
  sub_scan->add_option("--budget", scan_args.budget, "candidate budget for general mode");
  CheckArgs check_args;
  auto* sub_check = sub_nagata->add_subcommand("check", "classify one class");
  sub_check->add_option("--class", check_args.cls, "d,m1,...,mn (value^count allowed)");
  sub_check->add_option("--beta0", check_args.beta0, "threshold beta0 > 3");
  sub_check->add_option("--eps-n", check_args.eps_n, "Seshadri estimate");
  CoverArgs cover_args;
  auto* sub_cover = sub_nagata->add_subcommand("cover", "double-cover genus and the threshold it feeds");
  sub_cover->add_option("--gd", cover_args.gd, "genus of D");
  sub_cover->add_option("--eta-d", cover_args.eta_d, "eta.D");
  sub_cover->add_option("--kd", cover_args.kd, "canonical degree of D");
  sub_cover->add_option("--beta0", cover_args.beta0, "threshold beta0 > 3");

  std::optional<std::string> fig_n, fig_beta0, fig_mmax;
  auto* sub_fig = app.add_subcommand("figure1", "SVG of the hyperbola, its asymptote and the Nagata line");
  sub_fig->add_option("--n", fig_n, "number of points");
  sub_fig->add_option("--beta0", fig_beta0, "threshold beta0 > 3");
  sub_fig->add_option("--mmax", fig_mmax, "largest m plotted");

  VojtaArgs vojta;
  auto* sub_vojta = app.add_subcommand("vojta", "lower bound for Lambda_X");
  sub_vojta->add_option("--kl", vojta.kl, "K.L");
  sub_vojta->add_option("--l2", vojta.l2, "L^2");
  sub_vojta->add_option("--gamma", vojta.gamma, "arithmetic genus of curves in |L|");
  sub_vojta->add_option("--proj", vojta.proj, "comma-separated projection degrees n");
  sub_vojta->add_option("--m", vojta.m, "K = mL");

  SeshadriArgs sesh;
  auto* sub_sesh = app.add_subcommand("seshadri", "Seshadri constant estimates");
  sub_sesh->add_option("--n", sesh.n, "number of points");
  sub_sesh->add_option("--f", sesh.f, "value of f(n) in the Harbourne-Roe bound");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  }

  std::ostringstream buffer;
  int code = ok;
  try {
    const bool is_figure = sub_fig->parsed();
    const Format fmt = format_text.empty() ? (is_figure ? Format::SVG : Format::TABLE) : parse_format(format_text);
    if (is_figure) {
      if (fmt != Format::SVG) throw usage_error("figure1 only writes svg");
      if (!fig_n || !fig_beta0 || !fig_mmax) throw usage_error("figure1: --n, --beta0 and --mmax are required");
      const Integer n = parse_count("--n", *fig_n, 1);
      const Rational beta0 = parse_rational_flag("--beta0", *fig_beta0);
      if (beta0 <= 3) throw usage_error("--beta0 must exceed 3");
      const std::int64_t mmax = parse_count("--mmax", *fig_mmax, 1);
      buffer << figure1_svg(n, beta0, mmax);
    } else if (sub_bounds->parsed()) {
      render(cmd_bounds(bounds), fmt, buffer);
    } else if (sub_miyaoka->parsed()) {
      render(cmd_miyaoka(miyaoka), fmt, buffer);
    } else if (sub_scan->parsed()) {
      const unsigned workers = workers_from_env();
      try {
        render(cmd_nagata_scan(scan_args, workers), fmt, buffer);
      } catch (const scan_budget_error& e) {
        Document doc;
        doc.command = "nagata scan";
        doc.partial = true;
        const Rational beta0 = parse_rational_flag("--beta0", *scan_args.beta0);
        for (const auto& r : e.partial()) doc.results.push_back(region_record(r, beta0));
        render(doc, fmt, buffer);
        err << "error: " << e.what() << " (partial result written)\n";
        code = budget;
      }
    } else if (sub_check->parsed()) {
      render(cmd_nagata_check(check_args), fmt, buffer);
    } else if (sub_cover->parsed()) {
      render(cmd_nagata_cover(cover_args), fmt, buffer);
    } else if (sub_vojta->parsed()) {
      render(cmd_vojta(vojta), fmt, buffer);
    } else if (sub_sesh->parsed()) {
      render(cmd_seshadri(sesh), fmt, buffer);
    }
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const bounds_error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == errc::budget_exceeded ? budget : impossible;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return io;
    }
    file << buffer.str();
    file.flush();
    if (!file) {
      err << "error: failed writing '" << out_path << "'\n";
      return io;
    }
  }
  return code;
}

}  // namespace cbounds::cli
