// hcrown: verification suites, boundary mesh export, ellipticity scans and
// boundary probes for crown domains of harmonic NA groups.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <hcrown/hcrown.hpp>

namespace {

enum ExitCode { kOk = 0, kPropertyFailure = 1, kConfigError = 2, kIoError = 3 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int q = 1;
  int multiplicity = 1;
  std::uint64_t seed = 1;
  int samples = 200;
  hcrown::VerifyTolerances tol;
  std::string out = "-";
};

void validate(const RunConfig& cfg) {
  if (cfg.q < 1) throw ConfigError("q must be ≥ 1");
  if (cfg.multiplicity < 1) throw ConfigError("multiplicity must be ≥ 1");
  if (cfg.samples < 1) throw ConfigError("samples must be ≥ 1");
  const std::pair<const char*, double> tols[] = {
      {"tol-algebra", cfg.tol.algebra}, {"tol-roundtrip", cfg.tol.roundtrip}, {"tol-mesh", cfg.tol.mesh},
      {"tol-margin", cfg.tol.margin},   {"tol-laplacian", cfg.tol.laplacian}, {"tol-poisson", cfg.tol.poisson},
      {"tol-symmetry", cfg.tol.symmetry}};
  for (const auto& [name, value] : tols) {
    if (!(value > 0.0) || !std::isfinite(value)) throw ConfigError(std::string(name) + " must be > 0");
  }
}

// Holds either std::cout or an opened file.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw IoError("cannot open " + path + " for writing");
  }

  std::ostream& stream() { return file_ ? *file_ : std::cout; }

  void close(const std::string& path) {
    if (!file_) return;
    file_->close();
    if (!*file_) throw IoError("failed writing " + path);
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int cmd_verify(const RunConfig& cfg) {
  hcrown::VerifyConfig vc;
  vc.q = cfg.q;
  vc.multiplicity = cfg.multiplicity;
  vc.seed = cfg.seed;
  vc.samples = cfg.samples;
  vc.tol = cfg.tol;
  const auto results = hcrown::run_verification(vc);

  Output out(cfg.out);
  std::ostream& os = out.stream();
  os.precision(3);
  bool all = true;
  os << "group q=" << cfg.q << " p=" << hcrown::min_module_dim(cfg.q) * cfg.multiplicity << " seed=" << cfg.seed
     << "\n";
  for (const auto& r : results) {
    all = all && r.pass;
    os << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  worst=" << r.worst << "  tol=" << r.tolerance << "\n";
  }
  os << (all ? "all properties hold" : "property failures") << "\n";
  out.close(cfg.out);
  return all ? kOk : kPropertyFailure;
}

int cmd_mesh(const RunConfig& cfg, int resolution, std::string format) {
  if (resolution < 2) throw ConfigError("resolution must be ≥ 2");
  if (format.empty()) {
    format = cfg.out.size() > 4 && cfg.out.compare(cfg.out.size() - 4, 4, ".obj") == 0 ? "obj" : "csv";
  }
  const hcrown::BoundaryMesh mesh = hcrown::boundary_mesh(resolution);
  Output out(cfg.out);
  if (format == "obj") {
    hcrown::write_mesh_obj(out.stream(), mesh);
  } else {
    hcrown::write_mesh_csv(out.stream(), mesh);
  }
  out.close(cfg.out);
  return kOk;
}

struct ScanGrid {
  int n = 8;  // boundary mesh resolution; 0 gives an empty scan
  double s_min = 0.1;
  double s_max = 0.5;
  int s_steps = 3;
};

int cmd_scan(const RunConfig& cfg, const ScanGrid& grid) {
  if (grid.n < 0 || grid.n == 1) throw ConfigError("scan grid: n must be 0 or ≥ 2");
  if (grid.n > 0) {
    if (grid.s_steps < 1) throw ConfigError("scan grid: s-steps must be ≥ 1");
    if (!(grid.s_min >= 0.0) || !(grid.s_max >= grid.s_min)) throw ConfigError("scan grid: need 0 ≤ s-min ≤ s-max");
    if (grid.s_steps == 1 && grid.s_min != grid.s_max) throw ConfigError("scan grid: one step needs s-min = s-max");
  }
  const hcrown::SolvGroup g = hcrown::SolvGroup::build(cfg.q, cfg.multiplicity);
  hcrown::EllipticityOptions eo;
  eo.search.seed = cfg.seed;

  Output out(cfg.out);
  std::ostream& os = out.stream();
  os.precision(hcrown::kRoundTripDigits);
  os << "s,absV,absZ,t,margin,member\n";
  if (grid.n > 0) {
    for (const auto& v : hcrown::boundary_mesh(grid.n).vertices) {
      for (int k = 0; k < grid.s_steps; ++k) {
        const double s =
            grid.s_steps == 1 ? grid.s_min : grid.s_min + (grid.s_max - grid.s_min) * k / (grid.s_steps - 1);
        const hcrown::ComplexGroupPoint z = hcrown::norm_ray_point(g, v[0], v[1], v[2], s);
        os << s << ',' << v[0] << ',' << v[1] << ',' << v[2] << ',' << hcrown::ellipticity_margin(g, z, eo) << ','
           << (hcrown::crown_contains(g, z).inside ? 1 : 0) << '\n';
      }
    }
  }
  out.close(cfg.out);
  return kOk;
}

struct ProbeArgs {
  double abs_v = 1.0;
  double abs_z = 0.0;
  double t = 1.2309594173407747;
  double c_re = 1.0;
  double c_im = 0.0;
  int samples = 41;
  double overshoot = 0.1;
};

int cmd_probe(const RunConfig& cfg, const ProbeArgs& args) {
  if (args.samples < 2) throw ConfigError("probe: samples must be ≥ 2");
  if (!(args.overshoot >= 0.0)) throw ConfigError("probe: overshoot must be ≥ 0");
  if (args.abs_v < 0.0 || args.abs_z < 0.0) throw ConfigError("probe: absV and absZ are norms, must be ≥ 0");
  const hcrown::SolvGroup g = hcrown::SolvGroup::build(cfg.q, cfg.multiplicity);
  hcrown::ProbeOptions po;
  po.samples = args.samples;
  po.overshoot = args.overshoot;
  po.ellipticity.search.seed = cfg.seed;
  hcrown::Vec yv = hcrown::Vec::Zero(g.p());
  hcrown::Vec yz = hcrown::Vec::Zero(g.q());
  yv(0) = args.abs_v;
  yz(0) = args.abs_z;
  const hcrown::ProbeReport report =
      hcrown::boundary_probe(g, yv, yz, args.t, hcrown::SpectralParam{{args.c_re, args.c_im}}, po);

  Output out(cfg.out);
  std::ostream& os = out.stream();
  os.precision(hcrown::kRoundTripDigits);
  os << "s,margin,member,degenerate,re_a,im_a,ball_member\n";
  for (const auto& r : report.rows) {
    os << r.s << ',' << r.margin << ',' << (r.member ? 1 : 0) << ',' << (r.degenerate ? 1 : 0) << ',';
    if (r.a_lambda) {
      os << r.a_lambda->real() << ',' << r.a_lambda->imag();
    } else {
      os << ',';
    }
    os << ',';
    if (r.ball_member) os << (*r.ball_member ? 1 : 0);
    os << '\n';
  }
  out.close(cfg.out);

  std::cerr.precision(hcrown::kRoundTripDigits);
  auto note = [](const char* what, const std::optional<double>& s) {
    std::cerr << what << ": ";
    if (s) {
      std::cerr << "s = " << *s << '\n';
    } else {
      std::cerr << "none\n";
    }
  };
  note("crown membership lost", report.membership_exit);
  note("mixed decomposition degenerates", report.degenerate_at);
  if (hcrown::is_standard_heisenberg(g)) note("ball-model pair leaves X x X", report.ball_exit);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crown domains of harmonic NA groups: verification, meshes, scans, probes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value file; flags override it");

  RunConfig cfg;
  app.add_option("--q", cfg.q, "dimension of the center z")->capture_default_str();
  app.add_option("--mult", cfg.multiplicity, "multiplicity of the Clifford module")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "samples per property in verify")->capture_default_str();
  app.add_option("--tol-algebra", cfg.tol.algebra)->capture_default_str();
  app.add_option("--tol-roundtrip", cfg.tol.roundtrip)->capture_default_str();
  app.add_option("--tol-mesh", cfg.tol.mesh)->capture_default_str();
  app.add_option("--tol-margin", cfg.tol.margin)->capture_default_str();
  app.add_option("--tol-laplacian", cfg.tol.laplacian)->capture_default_str();
  app.add_option("--tol-poisson", cfg.tol.poisson)->capture_default_str();
  app.add_option("--tol-symmetry", cfg.tol.symmetry)->capture_default_str();
  app.add_option("--out", cfg.out, "output path, - for stdout")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run all invariant checks; exit 1 on any failure");

  auto* mesh = app.add_subcommand("mesh", "export the boundary surface of D");
  int resolution = 64;
  std::string format;
  mesh->add_option("--resolution", resolution, "vertices per grid side")->capture_default_str();
  mesh->add_option("--format", format, "csv or obj (default: from --out extension)")
      ->check(CLI::IsMember({"csv", "obj"}));

  auto* scan = app.add_subcommand("scan", "ellipticity margin and membership along rays through boundary vertices");
  ScanGrid grid;
  scan->add_option("--n", grid.n, "boundary mesh resolution of the ray directions (0: empty)")->capture_default_str();
  scan->add_option("--s-min", grid.s_min)->capture_default_str();
  scan->add_option("--s-max", grid.s_max)->capture_default_str();
  scan->add_option("--s-steps", grid.s_steps)->capture_default_str();

  auto* probe = app.add_subcommand("probe", "walk a ray s (|V| e_1, |Z| e_1, t) across the boundary");
  ProbeArgs pa;
  probe->add_option("--absV", pa.abs_v)->capture_default_str();
  probe->add_option("--absZ", pa.abs_z)->capture_default_str();
  probe->add_option("--t", pa.t)->capture_default_str();
  probe->add_option("--c-re", pa.c_re, "real part of c, lambda = c beta")->capture_default_str();
  probe->add_option("--c-im", pa.c_im)->capture_default_str();
  probe->add_option("--probe-samples", pa.samples)->capture_default_str();
  probe->add_option("--overshoot", pa.overshoot)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    validate(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*mesh) return cmd_mesh(cfg, resolution, format);
    if (*scan) return cmd_scan(cfg, grid);
    if (*probe) return cmd_probe(cfg, pa);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}
