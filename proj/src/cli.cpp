#include "hyperconv/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperconv/deformation.hpp"
#include "hyperconv/errors.hpp"
#include "hyperconv/models.hpp"
#include "hyperconv/orbit.hpp"
#include "hyperconv/rng.hpp"
#include "hyperconv/semigroup.hpp"
#include "hyperconv/serialization.hpp"

namespace hyperconv {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ModelFlags {
  std::string model = "chebyshev";
  std::string model_json;
  double h = 1.0 / 64;
  double x_max = 16.0;
  std::int64_t sample_limit = 64;
  std::string group_file;

  HypergroupPtr build() const {
    if (!model_json.empty()) return model_from_json(model_json);
    if (model == "chebyshev") return chebyshev_hypergroup(sample_limit);
    if (model == "bessel_kingman") return bessel_kingman(h, x_max);
    if (model == "hyperbolic") return hyperbolic(h, x_max);
    if (model == "double_coset") {
      if (group_file.empty())
        throw ValidationError("double_coset model needs --group-file");
      json g;
      try {
        g = json::parse(read_file(group_file));
      } catch (const json::exception& e) {
        throw ValidationError(std::string("group file: ") + e.what());
      }
      g["kind"] = "double_coset";
      return model_from_json(g.dump());
    }
    throw ValidationError("unknown model '" + model + "'");
  }
};

void add_model_flags(CLI::App* cmd, ModelFlags& mf) {
  cmd->add_option("--model", mf.model,
                  "chebyshev|bessel_kingman|hyperbolic|double_coset");
  cmd->add_option("--model-json", mf.model_json, "full model descriptor JSON");
  cmd->add_option("--step", mf.h, "grid step");
  cmd->add_option("--xmax", mf.x_max, "grid right end");
  cmd->add_option("--sample-limit", mf.sample_limit,
                  "stored point cap (discrete models)");
  cmd->add_option("--group-file", mf.group_file,
                  "JSON file with {table, subgroup}");
}

Measure parse_measure_arg(const Hypergroup& H, const std::string& spec) {
  if (spec.rfind("delta:", 0) == 0)
    return Measure::delta(H.point_at(std::stod(spec.substr(6))));
  if (spec.rfind("@", 0) == 0) {
    const std::string text = read_file(spec.substr(1));
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
      return measure_from_json(H, text);
    return measure_from_csv(H, text);
  }
  if (!spec.empty() && spec.front() == '{') return measure_from_json(H, spec);
  throw ValidationError("measure spec must be delta:<coord>, @file, or JSON");
}

std::vector<double> parse_vector(const std::string& s) {
  std::vector<double> v;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) v.push_back(std::stod(part));
  if (v.empty()) throw ValidationError("empty vector argument");
  return v;
}

class Output {
 public:
  Output(std::ostream& fallback, const std::string& path) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ValidationError("cannot write '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

std::string report_json(const Hypergroup& H, const AxiomReport& r) {
  std::ostringstream s;
  s << "{\"model\":\"" << json_escape(H.name()) << "\""
    << ",\"samples\":" << r.sample_count
    << ",\"associativity_defect\":" << format_double(r.associativity_defect)
    << ",\"identity_defect\":" << format_double(r.identity_defect)
    << ",\"commutativity_defect\":" << format_double(r.commutativity_defect)
    << ",\"haar_invariance_defect\":" << format_double(r.haar_invariance_defect)
    << ",\"condition_factor\":" << format_double(r.condition_factor)
    << ",\"eps_mass\":" << format_double(H.eps_mass())
    << ",\"pass\":" << (r.passed(H.eps_mass()) ? "true" : "false") << "}";
  return s.str();
}

// config file keys become default flags (explicit argv wins)
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string config_path;
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--config") config_path = args[i + 1];
  if (config_path.empty()) return args;
  json j;
  try {
    j = json::parse(read_file(config_path));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  std::vector<std::string> merged;
  for (auto it = args.begin(); it != args.end(); ++it) {
    if (*it == "--config") {
      ++it;
      continue;
    }
    merged.push_back(*it);
  }
  for (const auto& [k, v] : j.items()) {
    const std::string flag = "--" + k;
    if (std::find(merged.begin(), merged.end(), flag) != merged.end()) continue;
    merged.push_back(flag);
    if (v.is_boolean()) {
      if (!v.get<bool>()) merged.pop_back();
    } else if (v.is_string()) {
      merged.push_back(v.get<std::string>());
    } else {
      merged.push_back(v.dump());
    }
  }
  return merged;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hyperconv: commutative hypergroup convolutions, deformations, "
               "and Poisson semigroups"};
  app.require_subcommand(1);

  try {
    args = merge_config(std::move(args));
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::string out_path;
  app.add_option("--out", out_path, "write output to a file")
      ->configurable(false);

  // ---- axioms ----
  auto* axioms = app.add_subcommand("axioms", "run the hypergroup axiom checker");
  ModelFlags ax_mf;
  add_model_flags(axioms, ax_mf);
  std::size_t ax_samples = 100;
  std::uint64_t ax_seed = 0;
  std::string ax_alpha0;
  double ax_max_defect = -1.0;
  axioms->add_option("--samples", ax_samples, "sampled triples");
  axioms->add_option("--seed", ax_seed, "rng seed")->required();
  axioms->add_option("--alpha0", ax_alpha0,
                     "check the deformation by this semicharacter instead");
  axioms->add_option("--max-defect", ax_max_defect,
                     "certification gate for --alpha0 (default eps_mass)");

  // ---- convolve ----
  auto* conv = app.add_subcommand("convolve", "convolve two measures");
  ModelFlags cv_mf;
  add_model_flags(conv, cv_mf);
  std::string cv_mu, cv_nu, cv_format = "json";
  conv->add_option("--mu", cv_mu, "delta:<coord>, @file, or JSON")->required();
  conv->add_option("--nu", cv_nu, "delta:<coord>, @file, or JSON")->required();
  conv->add_option("--format", cv_format, "json|csv");

  // ---- deform-kernel ----
  auto* dk = app.add_subcommand("deform-kernel",
                                "kernel of the deformed hypergroup at (x,y)");
  ModelFlags dk_mf;
  add_model_flags(dk, dk_mf);
  std::string dk_alpha0, dk_format = "json";
  double dk_x = 0, dk_y = 0, dk_max_defect = -1.0;
  std::size_t dk_cert_samples = 200;
  std::uint64_t dk_seed = 0;
  dk->add_option("--alpha0", dk_alpha0, "positive semicharacter descriptor")
      ->required();
  dk->add_option("--x", dk_x)->required();
  dk->add_option("--y", dk_y)->required();
  dk->add_option("--seed", dk_seed, "certification sampling seed")->required();
  dk->add_option("--cert-samples", dk_cert_samples);
  dk->add_option("--max-defect", dk_max_defect,
                 "certification gate (default eps_mass)");
  dk->add_option("--format", dk_format, "json|csv");

  // ---- r-transform ----
  auto* rt = app.add_subcommand("r-transform", "R_{alpha0} of a measure");
  ModelFlags rt_mf;
  add_model_flags(rt, rt_mf);
  std::string rt_alpha0, rt_mu, rt_format = "json";
  rt->add_option("--alpha0", rt_alpha0)->required();
  rt->add_option("--mu", rt_mu)->required();
  rt->add_option("--format", rt_format, "json|csv");

  // ---- semigroup-evolve ----
  auto* sg = app.add_subcommand("semigroup-evolve",
                                "Poisson semigroup marginals mu_t");
  ModelFlags sg_mf;
  add_model_flags(sg, sg_mf);
  std::string sg_jump, sg_ts, sg_alpha0, sg_format = "json";
  double sg_eps = 1e-12, sg_max_defect = -1.0;
  std::size_t sg_cert_samples = 200;
  std::uint64_t sg_seed = 0;
  bool sg_seed_given = false;
  sg->add_option("--jump", sg_jump, "jump measure")->required();
  sg->add_option("--t", sg_ts, "comma-separated times")->required();
  sg->add_option("--eps", sg_eps, "series tail tolerance");
  sg->add_option("--alpha0", sg_alpha0, "evolve the deformed semigroup");
  sg->add_option("--seed", sg_seed, "certification seed (with --alpha0)")
      ->each([&](const std::string&) { sg_seed_given = true; });
  sg->add_option("--cert-samples", sg_cert_samples);
  sg->add_option("--max-defect", sg_max_defect);
  sg->add_option("--format", sg_format, "json|csv");

  // ---- levy ----
  auto* lv = app.add_subcommand("levy", "Levy measure (and its deformation)");
  ModelFlags lv_mf;
  add_model_flags(lv, lv_mf);
  std::string lv_jump, lv_alpha0;
  double lv_max_defect = -1.0;
  std::size_t lv_cert_samples = 200;
  std::uint64_t lv_seed = 0;
  bool lv_seed_given = false;
  lv->add_option("--jump", lv_jump)->required();
  lv->add_option("--alpha0", lv_alpha0, "also emit alpha0*eta");
  lv->add_option("--seed", lv_seed)->each([&](const std::string&) {
    lv_seed_given = true;
  });
  lv->add_option("--cert-samples", lv_cert_samples);
  lv->add_option("--max-defect", lv_max_defect);

  // ---- generator-check ----
  auto* gc = app.add_subcommand(
      "generator-check", "Remark-3.10 conjugation identity for the generator");
  ModelFlags gc_mf;
  add_model_flags(gc, gc_mf);
  std::string gc_jump, gc_alpha0;
  std::int64_t gc_basis_max = 128;
  double gc_tol = 1e-12, gc_max_defect = -1.0;
  std::size_t gc_cert_samples = 200;
  std::uint64_t gc_seed = 0;
  gc->add_option("--jump", gc_jump)->required();
  gc->add_option("--alpha0", gc_alpha0)->required();
  gc->add_option("--basis-max", gc_basis_max, "basis = points 0..basis-max");
  gc->add_option("--tol", gc_tol, "defect tolerance (exit 3 above it)");
  gc->add_option("--seed", gc_seed, "certification seed")->required();
  gc->add_option("--cert-samples", gc_cert_samples);
  gc->add_option("--max-defect", gc_max_defect);

  // ---- sl-solve ----
  auto* sl = app.add_subcommand("sl-solve",
                                "Sturm-Liouville eigenfunction phi_{i lambda}");
  std::string sl_profile = "power:k=2", sl_format = "csv";
  double sl_lambda = 1.0, sl_rho = -1.0, sl_h = 1.0 / 64, sl_xmax = 8.0;
  int sl_substeps = 128;
  sl->add_option("--profile", sl_profile, "power:k=..., sinh2, or JSON");
  sl->add_option("--lambda", sl_lambda)->required();
  sl->add_option("--rho", sl_rho, "override rho (default: estimate from A)");
  sl->add_option("--step", sl_h);
  sl->add_option("--xmax", sl_xmax);
  sl->add_option("--substeps", sl_substeps);
  sl->add_option("--format", sl_format, "csv|json");

  // ---- weyl ----
  auto* wy = app.add_subcommand("weyl", "Weyl chamber data for A/B/C/D");
  std::string wy_family = "A";
  int wy_d = 2;
  wy->add_option("--family", wy_family)->required();
  wy->add_option("--d", wy_d)->required();

  // ---- orbit-char ----
  auto* oc = app.add_subcommand("orbit-char",
                                "orbit character by Monte Carlo");
  std::string oc_group = "SO", oc_lambda, oc_x;
  std::size_t oc_n = 100000;
  std::uint64_t oc_seed = 0;
  bool oc_positive = false;
  oc->add_option("--group", oc_group, "SO|SU");
  oc->add_option("--lambda", oc_lambda, "comma-separated vector")->required();
  oc->add_option("--x", oc_x, "comma-separated vector")->required();
  oc->add_option("--n", oc_n);
  oc->add_option("--seed", oc_seed)->required();
  oc->add_flag("--positive", oc_positive,
               "estimate int e^{-<lambda, k.x>} dk instead");

  // ---- expo-check ----
  auto* ec = app.add_subcommand(
      "expo-check", "exponentiality estimates (model or orbit bound)");
  std::string ec_mode = "model";
  ModelFlags ec_mf;
  add_model_flags(ec, ec_mf);
  std::string ec_alpha0, ec_group = "SO", ec_rho;
  double ec_uradius = 1.0, ec_ball = 3.0;
  std::size_t ec_samples = 200, ec_n = 100000, ec_pairs = 20;
  std::uint64_t ec_seed = 0;
  ec->add_option("--mode", ec_mode, "model|orbit");
  ec->add_option("--alpha0", ec_alpha0, "semicharacter (model mode)");
  ec->add_option("--u-radius", ec_uradius);
  ec->add_option("--samples", ec_samples, "samples (model mode)");
  ec->add_option("--group", ec_group, "SO|SU (orbit mode)");
  ec->add_option("--rho", ec_rho, "rho vector (orbit mode)");
  ec->add_option("--pairs", ec_pairs, "sampled pairs (orbit mode)");
  ec->add_option("--ball", ec_ball, "pair base points live in this ball");
  ec->add_option("--n", ec_n, "MC samples per estimate (orbit mode)");
  ec->add_option("--seed", ec_seed)->required();

  // ---- demo-remark33 ----
  auto* dm = app.add_subcommand(
      "demo-remark33",
      "discontinuity of R_{alpha0}: mu_n -> delta_e but R(mu_n) does not");
  std::string dm_format = "json";
  double dm_s = 1.3169578969248166;  // arccosh 2
  int dm_nmax = 40;
  dm->add_option("--s", dm_s, "cosh slope");
  dm->add_option("--n-max", dm_nmax);
  dm->add_option("--format", dm_format, "json|csv");

  std::vector<const char*> argv;
  argv.push_back("hyperconv");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Output output(out, out_path);
    std::ostream& os = output.stream();

    auto gate = [](double v) -> std::optional<double> {
      return v < 0 ? std::nullopt : std::optional<double>(v);
    };
    auto emit_measure = [&](const Measure& m, const std::string& format) {
      os << (format == "csv" ? measure_to_csv(m) : measure_to_json(m) + "\n");
    };

    if (*axioms) {
      auto H = ax_mf.build();
      HypergroupPtr target = H;
      if (!ax_alpha0.empty()) {
        auto a0 = certify(*H, semicharacter_from_descriptor(*H, ax_alpha0),
                          200, ax_seed);
        target = deform(H, a0, gate(ax_max_defect));
      }
      const AxiomReport rep = check_axioms(*target, ax_samples, ax_seed);
      os << report_json(*target, rep) << "\n";
      return rep.passed(target->eps_mass()) ? 0 : 3;
    }

    if (*conv) {
      auto H = cv_mf.build();
      emit_measure(convolve(*H, parse_measure_arg(*H, cv_mu),
                            parse_measure_arg(*H, cv_nu)),
                   cv_format);
      return 0;
    }

    if (*dk) {
      auto H = dk_mf.build();
      auto a0 = certify(*H, semicharacter_from_descriptor(*H, dk_alpha0),
                        dk_cert_samples, dk_seed);
      auto D = deform(H, a0, gate(dk_max_defect));
      emit_measure(D->kernel(H->point_at(dk_x), H->point_at(dk_y)), dk_format);
      return 0;
    }

    if (*rt) {
      auto H = rt_mf.build();
      auto a0 = semicharacter_from_descriptor(*H, rt_alpha0);
      emit_measure(r_transform(a0, parse_measure_arg(*H, rt_mu)), rt_format);
      return 0;
    }

    if (*sg) {
      auto H = sg_mf.build();
      const Measure jump = parse_measure_arg(*H, sg_jump);
      std::optional<std::pair<PoissonSemigroup, double>> deformed;
      PoissonSemigroup S(H, jump);
      if (!sg_alpha0.empty()) {
        if (!sg_seed_given)
          throw ValidationError("--alpha0 needs --seed for certification");
        auto a0 = certify(*H, semicharacter_from_descriptor(*H, sg_alpha0),
                          sg_cert_samples, sg_seed);
        deformed = deform_semigroup(S, a0, gate(sg_max_defect));
      }
      const PoissonSemigroup& use = deformed ? deformed->first : S;
      const auto ts = parse_vector(sg_ts);
      if (sg_format == "csv") {
        os << "t,coord,weight\n";
        for (double t : ts) {
          const Measure mt = use.eval(t, sg_eps);
          for (const auto& [p, w] : mt.entries())
            os << format_double(t) << ',' << format_double(p.coord) << ','
               << format_double(w) << "\n";
        }
      } else {
        os << "{\"rate\":" << format_double(use.rate());
        if (deformed) os << ",\"c\":" << format_double(deformed->second);
        os << ",\"marginals\":[";
        for (std::size_t i = 0; i < ts.size(); ++i) {
          if (i) os << ',';
          os << "{\"t\":" << format_double(ts[i])
             << ",\"measure\":" << measure_to_json(use.eval(ts[i], sg_eps))
             << "}";
        }
        os << "]}\n";
      }
      return 0;
    }

    if (*lv) {
      auto H = lv_mf.build();
      PoissonSemigroup S(H, parse_measure_arg(*H, lv_jump));
      os << "{\"rate\":" << format_double(S.rate())
         << ",\"gaussian\":" << (S.gaussian() ? "true" : "false")
         << ",\"levy\":" << measure_to_json(S.levy_measure());
      if (!lv_alpha0.empty()) {
        if (!lv_seed_given)
          throw ValidationError("--alpha0 needs --seed for certification");
        auto a0 = certify(*H, semicharacter_from_descriptor(*H, lv_alpha0),
                          lv_cert_samples, lv_seed);
        auto [dS, c] = deform_semigroup(S, a0, gate(lv_max_defect));
        os << ",\"c\":" << format_double(c)
           << ",\"deformed_levy\":" << measure_to_json(dS.levy_measure());
      }
      os << "}\n";
      return 0;
    }

    if (*gc) {
      auto H = gc_mf.build();
      PoissonSemigroup S(H, parse_measure_arg(*H, gc_jump));
      auto a0 = certify(*H, semicharacter_from_descriptor(*H, gc_alpha0),
                        gc_cert_samples, gc_seed);
      std::vector<Point> basis;
      for (std::int64_t k = 0; k <= gc_basis_max; ++k)
        basis.push_back(H->point(k));
      const double defect =
          generator_deformed_check(S, a0, basis, gate(gc_max_defect));
      os << "{\"defect\":" << format_double(defect)
         << ",\"basis_size\":" << basis.size()
         << ",\"tol\":" << format_double(gc_tol)
         << ",\"pass\":" << (defect <= gc_tol ? "true" : "false") << "}\n";
      return defect <= gc_tol ? 0 : 3;
    }

    if (*sl) {
      auto profile = sl_profile_from_descriptor(sl_profile);
      double rho = sl_rho;
      if (rho < 0) {
        std::vector<double> probes;
        for (int i = 0; i <= 6; ++i)
          probes.push_back(sl_xmax * (0.25 + 0.75 * i / 6.0));
        rho = rho_of(*profile, probes).value;
      }
      const SlSolution sol =
          sl_solve(*profile, sl_lambda, rho, {sl_h, sl_xmax, sl_substeps});
      if (sl_format == "csv") {
        os << "x,phi,dphi\n";
        for (std::size_t k = 0; k < sol.phi.size(); ++k)
          os << format_double(static_cast<double>(k) * sol.h) << ','
             << format_double(sol.phi[k]) << ',' << format_double(sol.dphi[k])
             << "\n";
      } else {
        os << "{\"rho\":" << format_double(rho) << ",\"h\":"
           << format_double(sol.h) << ",\"phi\":[";
        for (std::size_t k = 0; k < sol.phi.size(); ++k)
          os << (k ? "," : "") << format_double(sol.phi[k]);
        os << "]}\n";
      }
      return 0;
    }

    if (*wy) {
      if (wy_family.size() != 1)
        throw ValidationError("--family must be one of A, B, C, D");
      const auto w = weyl_data(wy_family[0], wy_d);
      os << "{\"family\":\"" << wy_family << "\",\"d\":" << wy_d << ",\"rho\":[";
      for (std::size_t i = 0; i < w.rho.size(); ++i)
        os << (i ? "," : "") << format_double(w.rho[i]);
      os << "],\"minus_rho_in_orbit\":"
         << (w.minus_rho_in_orbit() ? "true" : "false") << "}\n";
      return 0;
    }

    if (*oc) {
      const CompactGroup g =
          oc_group == "SU" ? CompactGroup::SU : CompactGroup::SO;
      const auto lambda = parse_vector(oc_lambda);
      const auto x = parse_vector(oc_x);
      if (oc_positive) {
        const auto e = positive_orbit_semicharacter_mc(g, lambda, x, oc_n, oc_seed);
        os << "{\"estimate\":" << format_double(e.value)
           << ",\"stderr\":" << format_double(e.stderr_) << ",\"n\":" << e.n
           << ",\"seed\":" << oc_seed << "}\n";
      } else {
        const auto e = orbit_character_mc(g, lambda, x, oc_n, oc_seed);
        os << "{\"estimate_re\":" << format_double(e.value.real())
           << ",\"estimate_im\":" << format_double(e.value.imag())
           << ",\"stderr\":" << format_double(e.stderr_) << ",\"n\":" << e.n
           << ",\"seed\":" << oc_seed << "}\n";
      }
      return 0;
    }

    if (*ec) {
      if (ec_mode == "model") {
        if (ec_alpha0.empty())
          throw ValidationError("expo-check model mode needs --alpha0");
        auto H = ec_mf.build();
        auto a0 = semicharacter_from_descriptor(*H, ec_alpha0);
        const double est =
            exponentiality_estimate(*H, a0, ec_uradius, ec_samples, ec_seed);
        os << "{\"estimate\":" << format_double(est)
           << ",\"u_radius\":" << format_double(ec_uradius)
           << ",\"samples\":" << ec_samples << ",\"seed\":" << ec_seed << "}\n";
        return 0;
      }
      if (ec_mode != "orbit") throw ValidationError("--mode must be model|orbit");
      if (ec_rho.empty()) throw ValidationError("orbit mode needs --rho");
      const auto rho = parse_vector(ec_rho);
      const CompactGroup g =
          ec_group == "SU" ? CompactGroup::SU : CompactGroup::SO;
      // pairs: y uniform in the --ball ball, x = y + u with u in the unit ball
      Rng rng(ec_seed, 999);
      std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
      while (pairs.size() < ec_pairs) {
        std::vector<double> y(rho.size()), x(rho.size());
        double ny = 0, nu = 0;
        std::vector<double> u(rho.size());
        for (auto& v : y) v = rng.normal();
        for (auto& v : u) v = rng.normal();
        for (double v : y) ny += v * v;
        for (double v : u) nu += v * v;
        const double ry = ec_ball * std::pow(rng.uniform(), 1.0 / static_cast<double>(rho.size()));
        const double ru = std::pow(rng.uniform(), 1.0 / static_cast<double>(rho.size()));
        for (std::size_t i = 0; i < rho.size(); ++i) {
          y[i] *= ry / std::sqrt(ny);
          x[i] = y[i] + u[i] * ru / std::sqrt(nu);
        }
        pairs.emplace_back(std::move(x), std::move(y));
      }
      const auto rep = exponentiality_bound_check(g, rho, pairs, ec_n, ec_seed);
      const bool pass = rep.max_ratio <= 1.0 + 3.0 * rep.max_ratio_stderr;
      os << "{\"max_ratio\":" << format_double(rep.max_ratio)
         << ",\"stderr\":" << format_double(rep.max_ratio_stderr)
         << ",\"pairs\":" << rep.pairs.size() << ",\"n\":" << ec_n
         << ",\"seed\":" << ec_seed
         << ",\"pass\":" << (pass ? "true" : "false") << "}\n";
      return pass ? 0 : 3;
    }

    if (*dm) {
      auto H = chebyshev_hypergroup(std::max<std::int64_t>(dm_nmax, 64));
      auto a0 = sc_cosh(*H, dm_s);
      std::vector<double> tvs, rweights;
      for (int n = 1; n <= dm_nmax; ++n) {
        const Point xn = H->point(n);
        const double inv = 1.0 / a0(xn);
        const Measure mu_n = Measure::from_entries(
            H->space(), {{H->identity(), 1.0 - inv}, {xn, inv}});
        tvs.push_back(mu_n.minus(Measure::delta(H->identity())).tv_norm());
        rweights.push_back(r_transform(a0, mu_n).at(xn));
      }
      if (dm_format == "csv") {
        os << "n,tv_to_delta_e,r_weight_at_xn\n";
        for (int n = 1; n <= dm_nmax; ++n)
          os << n << ',' << format_double(tvs[static_cast<std::size_t>(n - 1)])
             << ',' << format_double(rweights[static_cast<std::size_t>(n - 1)])
             << "\n";
      } else {
        auto arr = [&](const std::vector<double>& v) {
          std::string s = "[";
          for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + format_double(v[i]);
          return s + "]";
        };
        os << "{\"s\":" << format_double(dm_s)
           << ",\"tv_to_delta_e\":" << arr(tvs)
           << ",\"r_weight_at_xn\":" << arr(rweights) << "}\n";
      }
      return 0;
    }

    err << "error: no subcommand selected\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace hyperconv
