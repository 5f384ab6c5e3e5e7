#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ajoin/alpha_spectra.hpp"
#include "ajoin/cospectral.hpp"
#include "ajoin/errors.hpp"
#include "ajoin/exact.hpp"
#include "ajoin/io.hpp"
#include "ajoin/verify.hpp"

using namespace ajoin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

// A graph source is an edge-list file if one exists at that path, otherwise
// a family descriptor such as complete:4 or cbipartite:2,3.
Graph resolve_graph(const std::string& source) {
  // Descriptors never contain '/' or '.', so such sources are always paths.
  if (std::filesystem::is_regular_file(source) || source.find_first_of("/.") != std::string::npos)
    return load_edge_list(source);
  if (source == "shrikhande") return shrikhande_graph();
  if (source.rfind("rook:", 0) == 0) return rook_graph(std::stoul(source.substr(5)));
  return parse_family_descriptor(source);
}

double parse_alpha(const std::string& text) {
  const double a = parse_rational(text).get_d();
  return AlphaParam(a).value();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<JoinKind> parse_kinds(const std::string& text) {
  if (text == "all") return {std::begin(kAllJoinKinds), std::end(kAllJoinKinds)};
  std::vector<JoinKind> out;
  for (const auto& k : split(text, ',')) out.push_back(parse_join_kind(k));
  if (out.empty()) throw InvalidParameter("no join kinds given");
  return out;
}

G2Class parse_g2_class(const std::string& text, const Graph& g2) {
  if (text == "auto") return detect_g2_class(g2);
  if (text == "arbitrary") return ArbitraryClass{};
  if (text == "regular") {
    const auto t = regularity(g2);
    if (!t) throw PreconditionError("--g2-class regular but G2 is not regular");
    return RegularClass{*t};
  }
  if (text == "bipartite" || text == "complete_bipartite") {
    const auto parts = complete_bipartite_parts(g2);
    if (!parts) throw PreconditionError("--g2-class bipartite but G2 is not complete bipartite");
    return CompleteBipartiteClass{parts->first, parts->second};
  }
  throw InvalidParameter("unknown --g2-class '" + text + "'");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InvalidInput("cannot write '" + out_path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json coefficients_json(const RationalPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

struct SpectrumArgs {
  std::string family, graph_file, join, g1, g2, alpha = "0.5", method = "direct", g2_class = "auto",
      format = "json", out;
  double tol = 1e-8;
  bool exact = false;
};

int cmd_spectrum(const SpectrumArgs& a) {
  const OutputFormat fmt = parse_output_format(a.format);
  if (!(a.tol > 0.0)) throw InvalidParameter("--tol must be positive");
  const bool single = !a.family.empty() || !a.graph_file.empty();
  if (single == !a.join.empty())
    throw InvalidParameter("give either --family/--graph or --join with --g1 and --g2");

  if (single) {
    if (!a.family.empty() && !a.graph_file.empty()) throw InvalidParameter("--family and --graph are exclusive");
    const Graph g = a.family.empty() ? load_edge_list(a.graph_file) : resolve_graph(a.family);
    if (a.method != "direct") throw InvalidParameter("--method applies to joins only");
    if (a.exact) {
      const Rational alpha = parse_rational(a.alpha);
      emit(dump({{"alpha", to_string(alpha)}, {"charpoly", coefficients_json(charpoly_exact(alpha_matrix_exact(g, alpha)))}}),
           a.out);
      return kExitOk;
    }
    const Spectrum s = sym_eigenvalues(alpha_matrix(g, AlphaParam(parse_alpha(a.alpha))));
    emit(fmt == OutputFormat::Json ? dump(to_json(s)) : fmt == OutputFormat::Csv ? to_csv(s) : to_plain(s), a.out);
    return kExitOk;
  }

  if (a.g1.empty() || a.g2.empty()) throw InvalidParameter("--join needs --g1 and --g2");
  const JoinKind kind = parse_join_kind(a.join);
  const Graph g1 = resolve_graph(a.g1);
  const Graph g2 = resolve_graph(a.g2);
  const JoinSpec spec(kind, g1, g2, parse_g2_class(a.g2_class, g2));

  if (a.exact) {
    const Rational alpha = parse_rational(a.alpha);
    const RationalPolynomial direct = charpoly_exact(alpha_matrix_exact(join(kind, g1, g2), alpha));
    Json j = {{"alpha", to_string(alpha)}, {"charpoly", coefficients_json(direct)}};
    int code = kExitOk;
    if (a.method != "direct") {
      const RationalPolynomial product = theorem_charpoly_exact(spec, alpha);
      j["theorem_product"] = coefficients_json(product);
      j["equal"] = product == direct;
      if (!(product == direct)) code = kExitFailed;
    }
    emit(dump(j), a.out);
    return code;
  }

  const AlphaParam alpha(parse_alpha(a.alpha));
  if (a.method == "direct") {
    const Spectrum s = direct_join_spectrum(spec, alpha);
    emit(fmt == OutputFormat::Json ? dump(to_json(s)) : fmt == OutputFormat::Csv ? to_csv(s) : to_plain(s), a.out);
    return kExitOk;
  }
  if (a.method == "closed") {
    const ClosedFormSpectrum s = closed_form_spectrum(spec, alpha);
    emit(fmt == OutputFormat::Json ? dump(to_json(s)) : fmt == OutputFormat::Csv ? to_csv(s) : to_plain(s), a.out);
    return kExitOk;
  }
  if (a.method != "both") throw InvalidParameter("--method must be direct, closed or both");

  const Spectrum direct = direct_join_spectrum(spec, alpha);
  const ClosedFormSpectrum closed = closed_form_spectrum(spec, alpha);
  const auto cmp = spectra_equal(closed.flatten(), direct, a.tol);
  const int code = cmp.equal ? kExitOk : kExitFailed;
  if (fmt == OutputFormat::Json) {
    Json agreement = {{"equal", cmp.equal}, {"max_deviation", json_number(cmp.max_deviation)},
                      {"tolerance", json_number(a.tol)}};
    if (!cmp.reason.empty()) agreement["reason"] = cmp.reason;
    emit(dump({{"join", std::string(to_string(kind))},
               {"alpha", json_number(alpha.value())},
               {"g2_class", describe(spec.g2_class())},
               {"direct", to_json(direct)},
               {"closed_form", to_json(closed)},
               {"agreement", agreement}}),
         a.out);
  } else if (fmt == OutputFormat::Csv) {
    std::string text = "method,value,clause\n";
    for (double v : direct.flatten()) text += "direct," + format_number(v) + ",\n";
    for (const auto& e : closed.solved())
      for (std::size_t k = 0; k < e.multiplicity; ++k) text += "closed," + format_number(e.value) + "," + e.clause + "\n";
    emit(text, a.out);
  } else {
    emit("direct:\n" + to_plain(direct) + "closed form:\n" + to_plain(closed) +
             "agreement: " + (cmp.equal ? "true" : "false") + " (max deviation " +
             format_number(cmp.max_deviation) + ")\n",
         a.out);
  }
  return code;
}

struct VerifyArgs {
  std::string suite, g2 = "mixed", format = "plain", out;
  std::size_t trials = 100;
  std::uint64_t seed = 7;
  double tol = 1e-7;
};

int cmd_verify(const VerifyArgs& a) {
  const OutputFormat fmt = parse_output_format(a.format);
  if (!(a.tol > 0.0)) throw InvalidParameter("--tol must be positive");
  if (a.trials == 0) throw InvalidParameter("--trials must be positive");
  VerifyOptions opts;
  opts.trials = a.trials;
  opts.g2 = parse_g2_mode(a.g2);
  opts.seed = a.seed;
  opts.tol = a.tol;
  const SuiteReport r = run_suite(a.suite, opts);
  emit(fmt == OutputFormat::Json ? dump(to_json(r)) : to_plain(r), a.out);
  return r.passed() ? kExitOk : kExitFailed;
}

struct CospectralArgs {
  std::string seed, kinds = "all", alpha_grid, fixed_g, format = "json", out;
  std::vector<std::string> seed_files, hs;
  double tol = 1e-7;
  bool exact = false;
};

int cmd_cospectral(const CospectralArgs& a) {
  const OutputFormat fmt = parse_output_format(a.format);
  if (fmt == OutputFormat::Csv) throw InvalidParameter("cospectral supports json and plain output");
  if (!(a.tol > 0.0)) throw InvalidParameter("--tol must be positive");
  if (a.seed.empty() == a.seed_files.empty()) throw InvalidParameter("give exactly one of --seed or --seed-files");

  SeedPair seed;
  if (!a.seed.empty()) {
    seed = seed_pair(a.seed);
  } else {
    if (a.seed_files.size() != 2) throw InvalidParameter("--seed-files takes two edge-list paths");
    seed.name = a.seed_files[0] + "+" + a.seed_files[1];
    seed.g_a = load_edge_list(a.seed_files[0]);
    seed.g_b = load_edge_list(a.seed_files[1]);
    seed.claimed_regularity = regularity(seed.g_a).value_or(0);
  }
  std::vector<double> alphas;
  if (a.alpha_grid.empty()) {
    alphas = default_alpha_grid();
  } else {
    for (const auto& t : split(a.alpha_grid, ',')) alphas.push_back(parse_alpha(t));
    if (alphas.empty()) throw InvalidParameter("--alpha-grid is empty");
  }
  const auto kinds = parse_kinds(a.kinds);
  const std::vector<std::string> hs = a.hs.empty() ? std::vector<std::string>{"complete:1"} : a.hs;

  Json alpha_json = Json::array();
  for (double x : alphas) alpha_json.push_back(json_number(x));
  Json report = {{"seed", seed.name}, {"alphas", alpha_json}};
  bool all_pass = true;
  std::string plain;

  try {
    Json families = Json::array();
    if (a.fixed_g.empty()) {
      const auto seed_cert = verify_cospectral(seed.g_a, seed.g_b, alphas, a.tol);
      report["seed_certificate"] = to_json(seed_cert);
      for (const auto& h_src : hs) {
        const Graph h = resolve_graph(h_src);
        for (const auto& member : generate_family(seed, h, kinds, alphas, a.tol)) {
          all_pass = all_pass && member.certificate.cospectral;
          families.push_back({{"h", h_src}, {"kind", std::string(to_string(member.kind))},
                              {"certificate", to_json(member.certificate)}});
          plain += std::string(member.certificate.cospectral ? "PASS" : "FAIL") + "  " +
                   std::string(to_string(member.kind)) + "  h=" + h_src +
                   "  n=" + std::to_string(member.certificate.g_a.order()) +
                   "  max_deviation=" + format_number(member.certificate.max_deviation) +
                   "  evidence=" + std::string(to_string(member.certificate.evidence)) + "\n";
        }
      }
    } else {
      // Second construction: fixed regular G, the seed pair plays (H1, H2).
      const Graph g = resolve_graph(a.fixed_g);
      const auto agreement = check_coronal_agreement(seed.g_a, seed.g_b, alphas, 20, a.exact, a.tol);
      Json ag = {{"cospectral", agreement.cospectral},
                 {"coronal_equal", agreement.coronal_equal},
                 {"max_spectral_deviation", json_number(agreement.max_spectral_deviation)},
                 {"max_coronal_deviation", json_number(agreement.max_coronal_deviation)}};
      if (agreement.exact_equal) ag["exact_equal"] = *agreement.exact_equal;
      if (!agreement.reason.empty()) ag["reason"] = agreement.reason;
      report["coronal_agreement"] = ag;
      if (agreement.exact_equal && !*agreement.exact_equal)
        throw PreconditionError("H pair refused: " + agreement.reason);
      for (const auto& member : generate_coronal_family(g, seed.g_a, seed.g_b, kinds, alphas, a.tol)) {
        all_pass = all_pass && member.certificate.cospectral;
        families.push_back({{"g", a.fixed_g}, {"kind", std::string(to_string(member.kind))},
                            {"certificate", to_json(member.certificate)}});
        plain += std::string(member.certificate.cospectral ? "PASS" : "FAIL") + "  " +
                 std::string(to_string(member.kind)) + "  g=" + a.fixed_g +
                 "  max_deviation=" + format_number(member.certificate.max_deviation) + "\n";
      }
    }
    report["families"] = families;
  } catch (const PreconditionError& e) {
    std::cerr << "ajoin cospectral: refused: " << e.what() << '\n';
    return kExitFailed;
  }
  report["all_certified"] = all_pass;
  emit(fmt == OutputFormat::Json ? dump(report) : plain, a.out);
  return all_pass ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A_alpha spectra of Q-vertex, Q-edge, T-vertex and T-edge joins"};
  app.require_subcommand(1);

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "spectrum of A_alpha(G) or of a join");
  spectrum->add_option("--family", sa.family, "family descriptor, e.g. complete:4");
  spectrum->add_option("--graph", sa.graph_file, "edge-list file");
  spectrum->add_option("--join", sa.join, "qvertex, qedge, tvertex or tedge");
  spectrum->add_option("--g1", sa.g1, "G1 descriptor or edge-list file");
  spectrum->add_option("--g2", sa.g2, "G2 descriptor or edge-list file");
  spectrum->add_option("--alpha", sa.alpha, "alpha in [0,1]; fractions like 1/3 accepted");
  spectrum->add_option("--method", sa.method, "direct, closed or both");
  spectrum->add_option("--g2-class", sa.g2_class, "auto, regular, bipartite or arbitrary");
  spectrum->add_option("--format", sa.format, "json, csv or plain");
  spectrum->add_option("--out", sa.out, "write to file instead of stdout");
  spectrum->add_option("--tol", sa.tol, "agreement tolerance for --method both");
  spectrum->add_flag("--exact", sa.exact, "exact characteristic polynomial over the rationals");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", va.suite, "lemmas, theorems, corollaries or examples")->required();
  verify->add_option("--trials", va.trials, "randomized instances per check");
  verify->add_option("--g2", va.g2, "G2 class for theorem trials: mixed, regular, bipartite, arbitrary");
  verify->add_option("--seed", va.seed, "random seed");
  verify->add_option("--tol", va.tol, "spectral agreement tolerance");
  verify->add_option("--format", va.format, "plain or json");
  verify->add_option("--out", va.out, "write to file instead of stdout");

  CospectralArgs ca;
  auto* cospectral = app.add_subcommand("cospectral", "certify cospectral join families");
  cospectral->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
  cospectral->add_option("--seed", ca.seed, "catalog seed pair (shrikhande-rook)");
  cospectral->add_option("--seed-files", ca.seed_files, "two edge-list files")->expected(2);
  cospectral->add_option("--h", ca.hs, "H graph(s): descriptors or edge-list files");
  cospectral->add_option("--kinds", ca.kinds, "all or a comma list of join kinds");
  cospectral->add_option("--alpha-grid", ca.alpha_grid, "comma-separated alphas");
  cospectral->add_option("--fixed-g", ca.fixed_g, "regular G; the seed pair is then used as (H1, H2)");
  cospectral->add_flag("--exact", ca.exact, "also compare coronals exactly (with --fixed-g)");
  cospectral->add_option("--tol", ca.tol, "certification tolerance");
  cospectral->add_option("--format", ca.format, "json or plain");
  cospectral->add_option("--out", ca.out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(sa);
    if (*verify) return cmd_verify(va);
    if (*cospectral) return cmd_cospectral(ca);
  } catch (const UnsupportedClass& e) {
    std::cerr << "ajoin: unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const PreconditionError& e) {
    std::cerr << "ajoin: closed forms do not apply: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const NumericInconsistency& e) {
    std::cerr << "ajoin: numeric inconsistency: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "ajoin: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
