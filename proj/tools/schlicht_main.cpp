#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "schlicht/certify.hpp"
#include "schlicht/errors.hpp"
#include "schlicht/json_io.hpp"

namespace {

using namespace schlicht;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

FamilyId parse_family(const std::string& name) {
  if (name == "koebe") return FamilyId::koebe_family;
  if (name == "g") return FamilyId::g_family;
  throw Error("unknown family: " + name + " (expected koebe or g)");
}

TaylorSeries load_series(const std::string& series_path, const std::string& builtin,
                         double theta, int order) {
  if (!series_path.empty()) return series_from_json(read_file(series_path));
  if (builtin == "koebe") return koebe_series(CirclePoint(theta), order);
  if (builtin == "g-extreme") return g_extreme_series(CirclePoint(theta), order);
  throw Error("need --series FILE or --builtin koebe|g-extreme");
}

FunctionalSpec load_functional(const std::string& path,
                               const std::optional<double>& phi_theta) {
  if (!path.empty()) return functional_from_json(read_file(path));
  if (phi_theta) return second_coeff_functional(CirclePoint(*phi_theta));
  throw Error("need --functional FILE or --phi-theta T");
}

struct GlobalOpts {
  int order = kDefaultOrder;
  int grid_radii = 32;
  int grid_angles = 256;
  int coarse_samples = kDefaultCoarseSamples;
  double tol = kDefaultRefineTol;
  std::string out;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical oracles for extremal problems on classes of univalent functions"};
  app.require_subcommand(1);

  GlobalOpts opt;
  app.add_option("--order", opt.order, "series truncation order");
  app.add_option("--grid-radii", opt.grid_radii, "number of grid radii");
  app.add_option("--grid-angles", opt.grid_angles, "grid angles per radius");
  app.add_option("--coarse-samples", opt.coarse_samples, "circle samples before refinement");
  app.add_option("--tol", opt.tol, "refinement tolerance");
  app.add_option("--out", opt.out, "output file path");

  // member
  CLI::App* member = app.add_subcommand("member", "run a class membership oracle");
  member->fallthrough();
  std::string member_class;
  std::string member_series, member_builtin;
  double member_theta = 0.0;
  double member_lambda = 1.0;
  std::string member_g_series, member_g_builtin;
  double member_g_theta = 0.0;
  double member_alpha = 0.0;
  member->add_option("--class", member_class, "class: u, g, starlike, convex, ctc")->required();
  member->add_option("--series", member_series, "series JSON file");
  member->add_option("--builtin", member_builtin, "builtin series: koebe or g-extreme");
  member->add_option("--theta", member_theta, "builtin parameter angle");
  member->add_option("--lambda", member_lambda, "defect bound for class u");
  member->add_option("--with-g", member_g_series, "comparison series JSON file (ctc)");
  member->add_option("--with-g-builtin", member_g_builtin, "builtin comparison series (ctc)");
  member->add_option("--with-g-theta", member_g_theta, "builtin comparison angle (ctc)");
  member->add_option("--alpha", member_alpha, "rotation angle for ctc");

  // sweep
  CLI::App* sweep = app.add_subcommand("sweep", "sweep Re G and H around the circle");
  sweep->fallthrough();
  std::string sweep_functional, sweep_family;
  std::optional<double> sweep_phi_theta;
  sweep->add_option("--functional", sweep_functional, "functional JSON file");
  sweep->add_option("--phi-theta", sweep_phi_theta, "use the second-coefficient functional at this angle");
  sweep->add_option("--family", sweep_family, "family: koebe or g")->required();

  // certify
  CLI::App* certify = app.add_subcommand("certify", "produce support-point certificates");
  certify->fallthrough();
  std::string cert_functional, cert_family, cert_measure;
  std::optional<double> cert_phi_theta;
  certify->add_option("--functional", cert_functional, "functional JSON file");
  certify->add_option("--phi-theta", cert_phi_theta, "use the second-coefficient functional at this angle");
  certify->add_option("--family", cert_family, "family: koebe or g")->required();
  certify->add_option("--candidate-measure", cert_measure, "atomic measure JSON file to grade");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const DiskGrid grid = DiskGrid::geometric(opt.grid_radii, opt.grid_angles);

    if (member->parsed()) {
      const TaylorSeries f = load_series(member_series, member_builtin, member_theta, opt.order);
      MembershipVerdict verdict = [&] {
        if (member_class == "u") return membership_u(f, member_lambda, grid);
        if (member_class == "g")
          return membership_halfplane(f, HalfplaneKind::convex_shift, -0.5, grid);
        if (member_class == "starlike")
          return membership_halfplane(f, HalfplaneKind::starlike, 0.0, grid);
        if (member_class == "convex")
          return membership_halfplane(f, HalfplaneKind::convex_shift, 0.0, grid);
        if (member_class == "ctc") {
          const TaylorSeries g =
              load_series(member_g_series, member_g_builtin, member_g_theta, opt.order);
          return membership_ctc(f, g, member_alpha, grid);
        }
        throw Error("unknown class: " + member_class);
      }();
      const std::string text = verdict_to_json(verdict);
      std::cout << text << "\n";
      if (!opt.out.empty()) write_file(opt.out, text + "\n");
      return verdict.verdict == Verdict::holds_on_grid ? 0 : 1;
    }

    if (sweep->parsed()) {
      const FunctionalSpec spec = load_functional(sweep_functional, sweep_phi_theta);
      const FamilyId family = parse_family(sweep_family);
      const std::vector<SweepRow> rows = circle_sweep(spec, family, opt.coarse_samples);
      const CircleMaxResult result =
          maximize_on_circle(spec, family, opt.coarse_samples, opt.tol);
      const std::string csv_path = opt.out.empty() ? "sweep.csv" : opt.out;
      write_file(csv_path, sweep_to_csv(rows));
      std::cout << sweep_summary_to_json(result, csv_path) << "\n";
      return 0;
    }

    // certify
    const FunctionalSpec spec = load_functional(cert_functional, cert_phi_theta);
    const FamilyId family = parse_family(cert_family);
    CertifyConfig config = default_config();
    config.order = opt.order;
    config.grid = grid;
    config.coarse_samples = opt.coarse_samples;
    config.refine_tol = opt.tol;
    std::vector<SupportCertificate> certs;
    try {
      if (!cert_measure.empty()) {
        const AtomicMeasure mu = measure_from_json(read_file(cert_measure));
        certs.push_back(certify_candidate(spec, family, mu, config));
      } else {
        certs = class_support_filter(spec, family, config);
      }
    } catch (const NonconstantRequiredError& e) {
      const std::string text = error_json(e.what());
      std::cout << text << "\n";
      if (!opt.out.empty()) write_file(opt.out, text + "\n");
      return 1;
    }
    const std::string text = certificates_to_json(certs);
    std::cout << text << "\n";
    if (!opt.out.empty()) write_file(opt.out, text + "\n");
    for (const SupportCertificate& cert : certs)
      if (cert.verdict != CertVerdict::rejected) return 0;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
