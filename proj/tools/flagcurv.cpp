// flagcurv command line: root data, flags, invariant structures and metrics,
// curvature positivity checks and verification campaigns.

#include "flagcurv/campaigns.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

using namespace flagcurv;

namespace {

constexpr const char* kNumbering =
    "Simple roots use Bourbaki numbering (B_n: a_n short; C_n: a_n long; D_n: a_{n-1}, a_n the fork; "
    "E: a_2 on the branch; F4: a_1,a_2 long; G2: a_1 short). A flag is written 'TYPE k=i,j,...' listing the "
    "1-based painted (Pi_K) nodes; a bare type is the maximal flag.";

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return s;
}

Json coords_json(const Coords& c) {
  Json a = Json::array();
  for (int v : c) a.push_back(v);
  return a;
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(to_string(v));
    rows.push_back(row);
  }
  return rows;
}

void emit(bool json, const Json& j, const std::string& text) {
  if (json) std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

// ---- roots ---------------------------------------------------------------

int cmd_roots(const std::string& type, bool json) {
  RootSystem rs(LieType::parse(type));
  Json j{{"type", rs.type().str()}, {"rank", rs.rank()}, {"roots_count", rs.size()},
         {"dual_coxeter", rs.dual_coxeter()}, {"marks", coords_json(rs.marks())}, {"roots", Json::array()}};
  std::string text = rs.type().str() + ": rank " + std::to_string(rs.rank()) + ", " + std::to_string(rs.size()) +
                     " roots, dual Coxeter number " + std::to_string(rs.dual_coxeter()) + ", marks " +
                     rs.coords_str(rs.marks()) + "\n";
  for (RootIndex a = 0; a < rs.size(); ++a) {
    j["roots"].push_back({{"coords", coords_json(rs.coords(a))}, {"height", rs.height(a)}, {"killing_norm", to_string(rs.killing(a, a))}});
    text += "  " + rs.root_str(a) + "  height " + std::to_string(rs.height(a)) + "  (a,a)_B = " + to_string(rs.killing(a, a)) + "\n";
  }
  emit(json, j, text);
  return 0;
}

// ---- flag / acs ----------------------------------------------------------

int cmd_flag(const FlagManifold& fm, bool json) {
  const RootSystem& rs = fm.roots();
  Json j{{"flag", fm.str()}, {"painted", Json::array()}, {"dim_complex", fm.dim_m()}, {"summands", Json::array()}};
  for (int k : fm.painted()) j["painted"].push_back(k + 1);
  std::string text = fm.str() + ": complex dimension " + std::to_string(fm.dim_m()) + ", " + std::to_string(fm.num_summands()) + " isotropy summands\n";
  const auto& summ = fm.summands();
  for (std::size_t x = 0; x < summ.size(); ++x) {
    Json roots = Json::array();
    text += "  m" + std::to_string(x + 1) + " (" + std::to_string(summ[x].size()) + " roots):";
    for (RootIndex a : summ[x]) {
      roots.push_back(coords_json(rs.coords(a)));
      text += " " + rs.root_str(a);
    }
    text += "\n";
    j["summands"].push_back(roots);
  }
  j["constant_metric_kahler"] = lambda_one_is_kahler(fm);
  text += std::string("  constant metric Kahler for some structure: ") + (lambda_one_is_kahler(fm) ? "yes" : "no") + "\n";
  emit(json, j, text);
  return 0;
}

int cmd_acs(const FlagManifold& fm, bool json) {
  SignPatternIndex idx(fm);
  if (idx.count() > 4096 && !json) {
    std::uint64_t integ = 0, cert = 0;
    for (std::uint64_t i = 0; i < idx.count(); ++i) {
      auto m = idx.nth(i);
      integ += idx.integrable(m);
      cert += idx.has_certificate(m);
    }
    std::cout << fm.str() << ": " << idx.count() << " structures up to conjugation, " << integ << " integrable, " << cert
              << " with a lemma certificate\n";
    return 0;
  }
  Json j{{"flag", fm.str()}, {"count", idx.count()}, {"structures", Json::array()}};
  std::string text = fm.str() + ": " + std::to_string(idx.count()) + " structures up to conjugation\n";
  const RootSystem& rs = fm.roots();
  for (const auto& acs : enumerate_acs(fm)) {
    const bool integ = is_integrable(fm, acs);
    auto cert = lemma_certificate(fm, acs);
    Json e{{"acs", acs.str()}, {"integrable", integ}, {"certificate", nullptr}};
    text += "  " + acs.str() + (integ ? "  integrable" : "  non-integrable");
    if (cert) {
      e["certificate"] = {coords_json(rs.coords(cert->alpha)), coords_json(rs.coords(cert->gamma))};
      text += "  certificate (" + rs.root_str(cert->alpha) + ", " + rs.root_str(cert->gamma) + ")";
    }
    text += "\n";
    j["structures"].push_back(e);
  }
  emit(json, j, text);
  return 0;
}

// ---- metrics ---------------------------------------------------------------

int cmd_metrics(const std::string& kind, const FlagManifold& fm, const AlmostComplexStructure& acs, bool json) {
  check_shape(fm, acs);
  MetricCone cone;
  if (kind == "kahler") cone = kahler_metrics(fm, acs);
  else if (kind == "quasi-kahler") cone = quasi_kahler_metrics(fm, acs);
  else if (kind == "almost-kahler") cone = almost_kahler_metrics(fm, acs);
  else throw std::invalid_argument("metric class must be kahler, quasi-kahler or almost-kahler");
  Json j{{"flag", fm.str()}, {"acs", acs.str()}, {"class", kind}, {"empty", cone.empty()}, {"dimension", cone.dimension()},
         {"cone", cone.str()}, {"relations", matrix_json(cone.relations())}};
  std::string text = kind + " metrics on " + fm.str() + " with " + acs.str() + ": " + cone.str() + "\n";
  if (!cone.empty()) {
    InvariantMetric w{*cone.witness()};
    j["witness"] = w.str();
    text += "  witness metric " + w.str() + "\n";
  }
  emit(json, j, text);
  return 0;
}

// ---- check -----------------------------------------------------------------

int cmd_check(const FlagManifold& fm, const AlmostComplexStructure& acs, const InvariantMetric& g, int samples,
              std::uint64_t seed, bool nakano, const std::string& csv, bool json) {
  check_shape(fm, acs);
  check_shape(fm, g);
  ChevalleyTable ct(fm.root_system());
  if (!csv.empty()) {
    CurvatureEngine eng(ct, fm, acs, g);
    std::ofstream out(csv);
    if (!out) throw std::invalid_argument("cannot write " + csv);
    out << CurvatureTensor(eng).dump_csv();
  }
  ClassifyOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  opts.nakano = nakano;
  auto v = classify(ct, fm, acs, g, opts);
  const RootSystem& rs = fm.roots();
  Json j{{"flag", fm.str()}, {"acs", acs.str()}, {"metric", g.str()}, {"integrable", is_integrable(fm, acs)},
         {"kahler", is_kahler(fm, acs, g)}, {"quasi_kahler", v.quasi_kahler}, {"verdict", verdict_name(v.kind)},
         {"exact", v.exact}, {"curvature_rational", v.curvature_rational}};
  std::string text = fm.str() + "  J=" + acs.str() + "  g=(" + g.str() + ")\n";
  text += std::string("  integrable: ") + (is_integrable(fm, acs) ? "yes" : "no") + "   Kahler: " + (is_kahler(fm, acs, g) ? "yes" : "no") +
          "   quasi-Kahler: " + (v.quasi_kahler ? "yes" : "no") + "\n";
  text += std::string("  verdict: ") + verdict_name(v.kind) + (v.exact ? " (exact)" : " (floating point)") + "\n";
  if (v.min_eig) {
    j["dual_nakano_min_eig"] = *v.min_eig;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", *v.min_eig);
    text += std::string("  dual-Nakano min eigenvalue: ") + buf + "\n";
  }
  if (v.nakano_min_eig) {
    j["nakano_min_eig"] = *v.nakano_min_eig;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", *v.nakano_min_eig);
    text += std::string("  Nakano min eigenvalue: ") + buf + "\n";
  }
  if (v.certificate) {
    j["certificate"] = {coords_json(rs.coords(v.certificate->alpha)), coords_json(rs.coords(v.certificate->gamma))};
    text += "  lemma certificate: (" + rs.root_str(v.certificate->alpha) + ", " + rs.root_str(v.certificate->gamma) + ")\n";
  }
  if (v.witness) {
    Json w{{"value", v.witness->value}};
    if (v.witness->exact_value) w["exact_value"] = v.witness->exact_value->str();
    if (v.witness->basis_pair)
      w["basis_pair"] = {coords_json(rs.coords(v.witness->basis_pair->first)), coords_json(rs.coords(v.witness->basis_pair->second))};
    j["griffiths_witness"] = w;
    text += "  Griffiths witness value: " + (v.witness->exact_value ? v.witness->exact_value->str() : std::to_string(v.witness->value));
    if (v.witness->basis_pair)
      text += " at (X_" + rs.root_str(v.witness->basis_pair->first) + ", X_" + rs.root_str(v.witness->basis_pair->second) + ")";
    text += "\n";
  }
  j["notes"] = v.notes;
  for (const auto& n : v.notes) text += "  note: " + n + "\n";
  emit(json, j, text);
  return 0;
}

// ---- cpn -------------------------------------------------------------------

int cmd_cpn(int n, const std::string& t_text, bool list, bool json) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  Rational t = parse_rational(t_text);
  if (t <= 0) throw std::invalid_argument("t must be positive");
  auto m = build_cpn_matrix(n, t);
  auto r = check_psd(to_surd(m));
  FlagManifold fm = projective_flag(n);
  auto order = cpn_root_order(fm.roots());
  Json j{{"n", n}, {"t", to_string(t)}, {"size", m.size()}, {"min_eig", r.min_eig}, {"psd", r.is_psd}, {"pd", r.is_pd}};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r.min_eig);
  std::string text = "closed-form matrix, n=" + std::to_string(n) + ", t=" + to_string(t) + ", size " + std::to_string(m.size()) +
                     ": min eigenvalue " + buf + (r.is_pd ? " (positive definite)" : r.is_psd ? " (semidefinite, singular)" : " (indefinite)") + "\n";
  Json labels = Json::array();
  for (RootIndex a : order) labels.push_back(fm.roots().c_series_label(a));
  j["order"] = labels;
  if (list) {
    j["matrix"] = matrix_json(m);
    text += "  order:";
    for (RootIndex a : order) text += " " + fm.roots().c_series_label(a);
    text += "\n";
    for (const auto& row : m) {
      text += "  ";
      for (const auto& v : row) text += to_string(v) + "\t";
      text += "\n";
    }
  }
  emit(json, j, text);
  return 0;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& name, CampaignConfig cfg, bool json) {
  std::vector<std::string> names = name == "all" ? campaign_names() : std::vector<std::string>{name};
  bool all_ok = true;
  Json out = Json::array();
  for (const auto& id : names) {
    auto rep = run_campaign(id, cfg);
    auto dir = write_report(rep, cfg);
    all_ok = all_ok && rep.passed();
    if (json) out.push_back({{"campaign", id}, {"passed", rep.passed()}, {"report", (dir / "report.json").string()}, {"summary", rep.summary}});
    else std::cout << rep.text() << "  report: " << (dir / "report.json").string() << "\n";
  }
  if (json) std::cout << out.dump(2) << '\n';
  return all_ok ? 0 : 1;
}

// ---- constants -------------------------------------------------------------

int cmd_constants(const std::string& type, bool csv, bool json) {
  auto rs = std::make_shared<const RootSystem>(LieType::parse(type));
  ChevalleyTable ct(rs);
  if (auto bad = ct.verify_identities()) throw std::logic_error("structure constants inconsistent: " + *bad);
  if (csv) {
    std::cout << ct.dump_csv();
    return 0;
  }
  Json j{{"type", rs->type().str()}, {"constants", Json::array()}};
  std::string text;
  for (RootIndex a = 0; a < rs->size(); ++a)
    for (RootIndex b = 0; b < rs->size(); ++b) {
      if (rs->sum(a, b) < 0) continue;
      auto m = ct.m(a, b);
      j["constants"].push_back({{"alpha", coords_json(rs->coords(a))}, {"beta", coords_json(rs->coords(b))}, {"m", m.str()}, {"m2", to_string(ct.m2(a, b))}});
      text += "m(" + rs->root_str(a) + ", " + rs->root_str(b) + ") = " + m.str() + "\n";
    }
  emit(json, j, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("Curvature of invariant almost-Hermitian metrics on generalized flag manifolds.\n") + kNumbering};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string type;
  std::vector<std::string> flag_tokens;
  std::string acs_text, metric_text, kind, csv, t_text = "1", campaign, config_path, out_dir;
  int samples = 10000, n = 2, max_rank = 0;
  std::uint64_t seed = 20240601;
  bool list = false, want_csv = false, no_nakano = false;

  auto* roots = app.add_subcommand("roots", "Positive roots, heights, Killing norms and marks of a simple type");
  roots->add_option("type", type, "Lie type, e.g. F4")->required();

  auto* flag = app.add_subcommand("flag", "Isotropy summands of a flag manifold");
  flag->add_option("flag", flag_tokens, "Flag, e.g. C4 k=2,3,4")->required();

  auto* acs = app.add_subcommand("acs", "Invariant almost-complex structures up to conjugation");
  acs->add_option("flag", flag_tokens, "Flag")->required();

  auto* metrics = app.add_subcommand("metrics", "Cone of Kahler, quasi-Kahler or almost-Kahler metrics");
  metrics->add_option("class", kind, "kahler | quasi-kahler | almost-kahler")->required()->check(CLI::IsMember({"kahler", "quasi-kahler", "almost-kahler"}));
  metrics->add_option("flag", flag_tokens, "Flag")->required();
  metrics->add_option("--acs", acs_text, "Signs per summand, e.g. +-+")->required();

  auto* check = app.add_subcommand("check", "Classify the curvature positivity of (J, g)");
  check->add_option("flag", flag_tokens, "Flag")->required();
  check->add_option("--acs", acs_text, "Signs per summand")->required();
  check->add_option("--metric", metric_text, "Positive rational weights per summand, e.g. 1,3/2")->required();
  check->add_option("--samples", samples, "Random Griffiths samples")->check(CLI::NonNegativeNumber);
  check->add_option("--seed", seed, "Sampling seed");
  check->add_option("--csv", csv, "Write every nonzero curvature entry to this file");
  check->add_flag("--no-nakano", no_nakano, "Skip the Nakano matrix");

  auto* cpn = app.add_subcommand("cpn", "Closed-form diagonal-pair matrix on Sp(n)/Sp(n-1)xU(1) with metric (1,t)");
  cpn->add_option("--n", n, "n >= 2")->required();
  cpn->add_option("--t", t_text, "Metric ratio t > 0 (rational)");
  cpn->add_flag("--list", list, "Print the matrix");

  auto* verify = app.add_subcommand("verify", "Run a verification campaign and write reports/<campaign>/");
  verify->add_option("campaign", campaign, "table1 | height3 | maximal | g2 | f4 | cpn-theorem | almost-kahler | all")->required();
  verify->add_option("--max-rank", max_rank, "Rank bound (n bound for cpn-theorem)");
  verify->add_option("--config", config_path, "key=value config file");
  verify->add_option("--out", out_dir, "Report directory (default reports)");
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_option("--samples", samples, "Random Griffiths samples");

  auto* constants = app.add_subcommand("constants", "Chevalley structure constants m_{a,b}");
  constants->add_option("type", type, "Lie type")->required();
  constants->add_flag("--csv", want_csv, "CSV alpha,beta,sign,radicand");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*roots) return cmd_roots(type, json);
    if (*constants) return cmd_constants(type, want_csv, json);
    if (*cpn) return cmd_cpn(n, t_text, list, json);
    if (*verify) {
      CampaignConfig cfg;
      if (!config_path.empty()) cfg = CampaignConfig::from_file(config_path);
      if (max_rank > 0) cfg.max_rank = max_rank;
      if (!out_dir.empty()) cfg.output_dir = out_dir;
      if (verify->count("--seed")) cfg.seed = seed;
      if (verify->count("--samples")) cfg.samples = samples;
      if (campaign != "all" && std::find(campaign_names().begin(), campaign_names().end(), campaign) == campaign_names().end())
        throw std::invalid_argument("unknown campaign '" + campaign + "'");
      return cmd_verify(campaign, cfg, json);
    }
    FlagManifold fm = FlagManifold::parse(join(flag_tokens));
    if (*flag) return cmd_flag(fm, json);
    if (*acs) return cmd_acs(fm, json);
    if (*metrics) return cmd_metrics(kind, fm, AlmostComplexStructure::parse(acs_text), json);
    if (*check)
      return cmd_check(fm, AlmostComplexStructure::parse(acs_text), InvariantMetric::parse(metric_text), samples, seed, !no_nakano, csv, json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n(run with --help for the type, flag and structure formats)\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
