// Command-line front end: spectrum computation (eig), identity verification
// (verify) and worked-example reconstructions (demo).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "compeig/json_io.hpp"
#include "compeig/oracles.hpp"
#include "compeig/random_gen.hpp"
#include "compeig/showcase.hpp"
#include "compeig/spectral.hpp"
#include "compeig/tensor_core.hpp"
#include "compeig/trace_identities.hpp"

namespace {

using namespace compeig;

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitHermiticity = 3;
constexpr int kExitConvergence = 4;

struct GlobalOptions {
  double tol = 1e-10;
  double cluster_tol = 1e-7;
  std::uint64_t seed = kDefaultSeed;
  bool seed_from_flag = false;
  std::string out;
  std::string format = "json";
  bool no_timestamp = false;
};

std::uint64_t effective_seed(const GlobalOptions& g) {
  if (!g.seed_from_flag) {
    if (const char* env = std::getenv("COMPLEMENT_EIG_SEED")) {
      try {
        return std::stoull(env);
      } catch (...) {
        throw ParseError("COMPLEMENT_EIG_SEED is not an integer");
      }
    }
  }
  return g.seed;
}

cplx parse_complex(const std::string& text) {
  // accepts forms like "1", "-2.5", "i", "0.5+0.5i", "1-0.3i", "2i"
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') {
    try {
      size_t used = 0;
      const double re = std::stod(s, &used);
      if (used != s.size()) throw ParseError("bad complex literal: " + text);
      return {re, 0.0};
    } catch (const std::invalid_argument&) {
      throw ParseError("bad complex literal: " + text);
    }
  }
  s.pop_back();  // strip the i
  // split at the last +/- that is not an exponent sign
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  try {
    if (split == std::string::npos) {
      if (s.empty() || s == "+") return {0.0, 1.0};
      if (s == "-") return {0.0, -1.0};
      return {0.0, std::stod(s)};
    }
    const double re = std::stod(s.substr(0, split));
    std::string im_part = s.substr(split);
    if (im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    return {re, std::stod(im_part)};
  } catch (const std::invalid_argument&) {
    throw ParseError("bad complex literal: " + text);
  }
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

json config_json(const GlobalOptions& g, std::uint64_t seed) {
  json c{{"tol", g.tol},
         {"cluster_tol", g.cluster_tol},
         {"seed", seed},
         {"format", g.format}};
  if (!g.no_timestamp) c["timestamp"] = iso_timestamp();
  return c;
}

void render_text(const json& report, std::ostream& os) {
  if (report.contains("spectrum")) {
    os << "eigenvalue groups:\n";
    for (const auto& g : report["spectrum"]["groups"])
      os << "  lambda = " << std::setw(14) << g["lambda"].get<double>()
         << "  multiplicity = " << g["multiplicity"].get<int>() << "\n";
  }
  if (report.contains("checks") && !report["checks"].empty()) {
    os << "checks:\n";
    for (const auto& c : report["checks"])
      os << "  " << std::left << std::setw(36) << c["name"].get<std::string>()
         << " dev = " << std::scientific << std::setprecision(3)
         << c["max_dev"].get<double>() << "  tol = " << c["tol"].get<double>()
         << (c["pass"].get<bool>() ? "  PASS" : "  FAIL") << std::defaultfloat
         << "\n";
  }
  os << (report["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

int emit_report(const json& report, const GlobalOptions& g) {
  std::ostringstream body;
  if (g.format == "text")
    render_text(report, body);
  else
    body << report.dump(2) << "\n";
  if (g.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(g.out);
    if (!f) throw ParseError("cannot open output file: " + g.out);
    f << body.str();
  }
  return report["pass"].get<bool>() ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------
// eig
// ---------------------------------------------------------------------------

int run_eig(const std::string& input, const GlobalOptions& g,
            bool no_hermitian_check) {
  const MatrixFile mf = load_matrix(input);
  SpectralConfig cfg;
  cfg.tol = g.tol;
  cfg.cluster_tol = g.cluster_tol;
  cfg.hermitian_check = !no_hermitian_check;

  const SpectrumReport sr = full_spectrum(mf.matrix, cfg);
  json checks = json::array();
  for (const auto& c : sr.checks) checks.push_back(check_to_json(c));
  json report{{"input", matrix_to_json(mf.matrix, mf.label)},
              {"spectrum", spectrum_to_json(sr)},
              {"checks", checks},
              {"config", config_json(g, effective_seed(g))},
              {"pass", sr.pass}};
  return emit_report(report, g);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

void run_suite_kronecker(std::vector<IdentityCheckResult>& out) {
  // contraction identity: exact integer statement for all n <= 5
  for (int n = 1; n <= 5; ++n)
    for (int s = 0; s <= n; ++s)
      for (int p = s; p <= n; ++p) {
        long long max_dev = 0;
        std::vector<int> fixed(2 * s, 1);
        while (true) {
          std::vector<int> upper(fixed.begin(), fixed.begin() + s);
          std::vector<int> lower(fixed.begin() + s, fixed.end());
          // left: contract p - s trailing pairs
          long long lhs = 0;
          std::vector<int> t(p - s, 1);
          while (true) {
            std::vector<int> u = upper, l = lower;
            u.insert(u.end(), t.begin(), t.end());
            l.insert(l.end(), t.begin(), t.end());
            lhs += kronecker(u, l, n);
            int k = 0;
            for (; k < p - s; ++k) {
              if (t[k] < n) {
                ++t[k];
                break;
              }
              t[k] = 1;
            }
            if (k == p - s) break;
          }
          long long fact = 1;
          for (int q = n - p + 1; q <= n - s; ++q) fact *= q;
          const long long rhs = fact * kronecker(upper, lower, n);
          max_dev = std::max(max_dev, std::llabs(lhs - rhs));
          int k = 0;
          for (; k < 2 * s; ++k) {
            if (fixed[k] < n) {
              ++fixed[k];
              break;
            }
            fixed[k] = 1;
          }
          if (k == 2 * s) break;
        }
        out.push_back(make_check("kronecker_contraction n=" +
                                     std::to_string(n) + " s=" +
                                     std::to_string(s) + " p=" +
                                     std::to_string(p),
                                 double(max_dev), 1.0, 0.0));
      }

  // product contraction: delta_s * delta_p -> order p - s, n <= 4 kept
  // small because the sum has 2p free/summed indices
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= n; ++p)
      for (int s = 0; s <= p; ++s) {
        long long max_dev = 0;
        std::vector<int> free_idx(2 * (p - s), 1);
        while (true) {
          std::vector<int> iu(free_idx.begin(), free_idx.begin() + (p - s));
          std::vector<int> il(free_idx.begin() + (p - s), free_idx.end());
          long long lhs = 0;
          std::vector<int> sum_idx(2 * s, 1);
          while (true) {
            std::vector<int> j(sum_idx.begin(), sum_idx.begin() + s);
            std::vector<int> i(sum_idx.begin() + s, sum_idx.end());
            const int d1 = kronecker(j, i, n);
            if (d1 != 0) {
              std::vector<int> u2 = i;
              u2.insert(u2.end(), iu.begin(), iu.end());
              std::vector<int> l2 = j;
              l2.insert(l2.end(), il.begin(), il.end());
              lhs += d1 * kronecker(u2, l2, n);
            }
            int k = 0;
            for (; k < 2 * s; ++k) {
              if (sum_idx[k] < n) {
                ++sum_idx[k];
                break;
              }
              sum_idx[k] = 1;
            }
            if (k == 2 * s) break;
          }
          long long fact = 1;
          for (int q = 2; q <= s; ++q) fact *= q;
          long long ratio = 1;
          for (int q = n - p + 1; q <= n - p + s; ++q) ratio *= q;
          const long long rhs = fact * ratio * kronecker(iu, il, n);
          max_dev = std::max(max_dev, std::llabs(lhs - rhs));
          int k = 0;
          for (; k < 2 * (p - s); ++k) {
            if (free_idx[k] < n) {
              ++free_idx[k];
              break;
            }
            free_idx[k] = 1;
          }
          if (k == 2 * (p - s)) break;
        }
        out.push_back(make_check("kronecker_product n=" + std::to_string(n) +
                                     " s=" + std::to_string(s) + " p=" +
                                     std::to_string(p),
                                 double(max_dev), 1.0, 0.0));
      }
}

std::vector<ComplexMatrix> verify_inputs(const std::string& input, int rand_n,
                                         int rand_k, Rng& rng) {
  std::vector<ComplexMatrix> mats;
  if (rand_n > 0) {
    for (int k = 0; k < rand_k; ++k) mats.push_back(random_matrix(rand_n, rng));
  } else {
    mats.push_back(load_matrix(input).matrix);
  }
  return mats;
}

void run_suite_lemma1(const std::vector<ComplexMatrix>& mats, double tol,
                      std::vector<IdentityCheckResult>& out) {
  int idx = 0;
  for (const ComplexMatrix& a : mats) {
    const int n = a.n();
    for (int s = 1; s <= std::min(n, 3); ++s)
      for (int r = 1; r <= s; ++r) {
        IdentityCheckResult c =
            (n <= 4) ? check_lemma1(a, r, s, tol)
                     : check_lemma1(a, r, s, Lemma1Indices{1, {}, {}, 2}, tol);
        c.name = "lemma1 #" + std::to_string(idx) + " r=" + std::to_string(r) +
                 " s=" + std::to_string(s);
        out.push_back(std::move(c));
      }
    for (int s = 1; s <= std::min(n, 3); ++s) {
      IdentityCheckResult c = check_corollary1(a, s, tol);
      c.name = "corollary1 #" + std::to_string(idx) + " s=" +
               std::to_string(s);
      out.push_back(std::move(c));
    }
    ++idx;
  }
}

void run_suite_cauchy_binet(const std::vector<ComplexMatrix>& mats, double tol,
                            Rng& rng, std::vector<IdentityCheckResult>& out) {
  int idx = 0;
  for (const ComplexMatrix& a : mats) {
    const int n = a.n();
    const ComplexMatrix b = random_matrix(n, rng);
    for (int s = 1; s <= std::min(n, 4); ++s) {
      const auto subsets = MultiIndex::subsets(n, s);
      double dev = 0, scale = 1;
      for (const MultiIndex& j : subsets)
        for (const MultiIndex& i : subsets) {
          const IdentityCheckResult c = cauchy_binet(a, b, j, i, tol);
          dev = std::max(dev, c.max_rel_dev);
        }
      out.push_back(make_check("cauchy_binet #" + std::to_string(idx) +
                                   " s=" + std::to_string(s),
                               dev, scale, tol));
    }
    ++idx;
  }
}

void run_suite_traces(const std::vector<ComplexMatrix>& mats, double tol,
                      bool bell_route, std::vector<IdentityCheckResult>& out) {
  int idx = 0;
  for (const ComplexMatrix& a : mats) {
    const int n = a.n();
    for (int s = 1; s <= n; ++s) {
      const ComplexMatrix via = bell_route
                                    ? reduced_complement_via_bell(a, s)
                                    : reduced_complement_via_traces(a, s);
      ComplexMatrix direct(n);
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
          direct.at(j - 1, i - 1) =
              complement(a, s, MultiIndex({j}, n), MultiIndex({i}, n));
      const double scale = 1.0 + direct.max_norm();
      out.push_back(make_check(
          std::string(bell_route ? "bell" : "traces") + " #" +
              std::to_string(idx) + " s=" + std::to_string(s),
          (via - direct).max_norm(), scale, tol));
    }
    ++idx;
  }
}

void run_suite_minor_sums(const std::vector<ComplexMatrix>& mats, double tol,
                          std::vector<IdentityCheckResult>& out) {
  int idx = 0;
  for (const ComplexMatrix& a : mats) {
    const int n = a.n();
    for (int s = 0; s <= n; ++s) {
      const cplx direct = minor_trace_sum_direct(a, s);
      const double scale = 1.0 + std::abs(direct);
      const double dev =
          std::max(std::abs(minor_trace_sum_via_traces(a, s) - direct),
                   std::abs(minor_trace_sum_via_bell(a, s) - direct));
      out.push_back(make_check("minor_sums #" + std::to_string(idx) + " s=" +
                                   std::to_string(s),
                               dev, scale, tol));
    }
    ++idx;
  }
}

int run_verify(const std::string& input, const std::string& suite,
               int rand_n, int rand_k, const GlobalOptions& g) {
  const std::uint64_t seed = effective_seed(g);
  Rng rng(seed);
  std::vector<IdentityCheckResult> checks;

  const bool all = (suite == "all");
  std::vector<ComplexMatrix> mats;
  if (suite != "kronecker" || all)
    mats = verify_inputs(input, rand_n, rand_k, rng);

  if (all || suite == "kronecker") run_suite_kronecker(checks);
  if (all || suite == "lemma1") run_suite_lemma1(mats, g.tol, checks);
  if (all || suite == "cauchy-binet")
    run_suite_cauchy_binet(mats, g.tol, rng, checks);
  if (all || suite == "traces") run_suite_traces(mats, g.tol, false, checks);
  if (all || suite == "bell") run_suite_traces(mats, g.tol, true, checks);
  if (all || suite == "minor-sums") run_suite_minor_sums(mats, g.tol, checks);

  json jchecks = json::array();
  bool pass = true;
  for (const auto& c : checks) {
    jchecks.push_back(check_to_json(c));
    pass = pass && c.pass;
  }
  json input_desc;
  if (rand_n > 0)
    input_desc = {{"random", {{"n", rand_n}, {"count", rand_k}}}};
  else if (!mats.empty())
    input_desc = matrix_to_json(mats[0]);
  json report{{"input", input_desc},
              {"checks", jchecks},
              {"config", config_json(g, seed)},
              {"pass", pass}};
  return emit_report(report, g);
}

// ---------------------------------------------------------------------------
// demo
// ---------------------------------------------------------------------------

int run_demo_two_level(double v11, double v22, const std::string& v12_text,
                       const GlobalOptions& g) {
  showcase::TwoLevelParams p{v11, v22, parse_complex(v12_text)};
  const ComplexMatrix h = showcase::two_level_hamiltonian(p);
  const showcase::TwoLevelReference ref = showcase::two_level_reference(p);

  std::vector<IdentityCheckResult> checks;
  SpectralConfig cfg;
  cfg.tol = g.tol;
  const auto groups = eigenvalues(h, cfg);
  checks.push_back(make_check(
      "eigenvalues vs closed form",
      std::max(std::abs(groups.front().lambda - ref.lambda_minus),
               std::abs(groups.back().lambda - ref.lambda_plus)),
      1.0 + std::abs(ref.omega), 1e-12));

  const ComplexMatrix adj_p =
      adjugate(characteristic_matrix(h, ref.lambda_plus).c);
  const ComplexMatrix adj_m =
      adjugate(characteristic_matrix(h, ref.lambda_minus).c);
  checks.push_back(make_check("adjugate C(lambda+) vs closed form",
                              (adj_p - ref.adj_c_plus).max_norm(),
                              1.0 + ref.adj_c_plus.max_norm(), 1e-12));
  checks.push_back(make_check("adjugate C(lambda-) vs closed form",
                              (adj_m - ref.adj_c_minus).max_norm(),
                              1.0 + ref.adj_c_minus.max_norm(), 1e-12));

  const Vector vp = eigenvector_nondegenerate(h, ref.lambda_plus, cfg);
  const Vector vm = eigenvector_nondegenerate(h, ref.lambda_minus, cfg);
  auto cross = [](const Vector& a, const Vector& b) {
    return std::abs(a[0] * b[1] - a[1] * b[0]);
  };
  checks.push_back(make_check("chi+ parallelism",
                              cross(vp, ref.chi_plus), 1.0, 1e-12));
  checks.push_back(make_check("chi- parallelism",
                              cross(vm, ref.chi_minus), 1.0, 1e-12));

  json jchecks = json::array();
  bool pass = true;
  for (const auto& c : checks) {
    jchecks.push_back(check_to_json(c));
    pass = pass && c.pass;
  }
  json report{
      {"input", matrix_to_json(h, "two-level")},
      {"reference",
       {{"lambda_plus", ref.lambda_plus},
        {"lambda_minus", ref.lambda_minus},
        {"omega", ref.omega},
        {"chi_plus", vector_to_json(ref.chi_plus)},
        {"chi_minus", vector_to_json(ref.chi_minus)}}},
      {"checks", jchecks},
      {"config", config_json(g, effective_seed(g))},
      {"pass", pass}};
  return emit_report(report, g);
}

int run_demo_dirac(double m, const std::string& p_text,
                   const GlobalOptions& g) {
  showcase::DiracParams dp;
  dp.m = m;
  std::stringstream ss(p_text);
  std::string item;
  for (int k = 0; k < 3; ++k) {
    if (!std::getline(ss, item, ','))
      throw ParseError("momentum must be three comma-separated numbers");
    dp.p[k] = std::stod(item);
  }

  const ComplexMatrix h = showcase::dirac_hamiltonian(dp);
  const showcase::DiracReference ref = showcase::dirac_reference(dp);
  const double e = ref.energy;
  const ComplexMatrix c = characteristic_matrix(h, e).c;

  std::vector<IdentityCheckResult> checks;
  checks.push_back(
      make_check("det C(E) = 0", std::abs(det(c)), std::pow(e, 4.0), 1e-9));
  checks.push_back(make_check("adj C(E) = 0", adjugate(c).max_norm(),
                              std::pow(e, 3.0), 1e-9));
  const ComplexMatrix psi = reduced_complement_via_traces(c, 2);
  checks.push_back(make_check("psi = 2E (pslash + m) gamma0",
                              (psi - ref.psi).max_norm(),
                              1.0 + ref.psi.max_norm(), 1e-10));
  checks.push_back(make_check("C(E) psi = 0", (c * psi).max_norm(),
                              1.0 + c.max_norm() * psi.max_norm(), 1e-10));

  SpectralConfig cfg;
  cfg.tol = g.tol;
  const auto vecs = eigenvectors_degenerate(h, e, 2, cfg);
  const std::vector<Vector> span_u = pivoted_orthonormalize(
      {ref.u_plus, ref.u_minus}, 1e-12);
  const auto angles = oracle::subspace_angles(span_u, vecs);
  checks.push_back(
      make_check("eigenspace vs u(p,+-) span", angles.back(), 1.0, 1e-8));

  json jchecks = json::array();
  bool pass = true;
  for (const auto& c2 : checks) {
    jchecks.push_back(check_to_json(c2));
    pass = pass && c2.pass;
  }
  json report{{"input", matrix_to_json(h, "dirac")},
              {"reference",
               {{"energy", e},
                {"u_plus", vector_to_json(ref.u_plus)},
                {"u_minus", vector_to_json(ref.u_minus)},
                {"v_plus", vector_to_json(ref.v_plus)},
                {"v_minus", vector_to_json(ref.v_minus)}}},
              {"checks", jchecks},
              {"config", config_json(g, effective_seed(g))},
              {"pass", pass}};
  return emit_report(report, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian eigenvectors from adjugates and reduced "
               "complements of minor determinants"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions g;
  app.add_option("--tol", g.tol, "identity/residual tolerance");
  app.add_option("--cluster-tol", g.cluster_tol,
                 "eigenvalue clustering tolerance");
  auto* seed_opt = app.add_option("--seed", g.seed, "random seed");
  app.add_option("--out", g.out, "write the report to this path");
  app.add_option("--format", g.format, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-timestamp", g.no_timestamp,
               "omit the timestamp from the report");

  std::string input = "-";
  bool no_hermitian_check = false;
  auto* eig = app.add_subcommand("eig", "compute the full spectrum");
  eig->add_option("input", input, "matrix file (JSON or text), '-' for stdin");
  eig->add_flag("--no-hermitian-check", no_hermitian_check,
                "skip the hermiticity validation");

  std::string suite = "all";
  std::vector<int> random_spec;
  auto* verify = app.add_subcommand("verify", "run identity check suites");
  verify->add_option("input", input, "matrix file, '-' for stdin");
  verify->add_option("--suite", suite, "which identity family to check")
      ->check(CLI::IsMember({"kronecker", "lemma1", "cauchy-binet", "traces",
                             "bell", "minor-sums", "all"}));
  verify->add_option("--random", random_spec,
                     "generate k random n x n matrices: --random n k")
      ->expected(2);

  auto* demo = app.add_subcommand("demo", "reconstruct a worked example");
  std::string demo_name;
  demo->add_option("name", demo_name, "two-level or dirac")
      ->required()
      ->check(CLI::IsMember({"two-level", "dirac"}));
  double v11 = 0.0, v22 = 0.0, dm = 1.0;
  std::string v12 = "0", pvec = "0,0,0";
  demo->add_option("--v11", v11, "two-level diagonal entry");
  demo->add_option("--v22", v22, "two-level diagonal entry");
  demo->add_option("--v12", v12, "two-level coupling, e.g. 0.5+0.5i");
  demo->add_option("--m", dm, "Dirac mass");
  demo->add_option("--p", pvec, "Dirac momentum: px,py,pz");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }
  g.seed_from_flag = seed_opt->count() > 0;

  try {
    if (eig->parsed()) return run_eig(input, g, no_hermitian_check);
    if (verify->parsed()) {
      const int rn = random_spec.size() == 2 ? random_spec[0] : 0;
      const int rk = random_spec.size() == 2 ? random_spec[1] : 0;
      return run_verify(input, suite, rn, rk, g);
    }
    if (demo->parsed()) {
      if (demo_name == "two-level") return run_demo_two_level(v11, v22, v12, g);
      return run_demo_dirac(dm, pvec, g);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const HermiticityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHermiticity;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  }
  return kExitParse;
}
