#include "schlicht/certify.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <utility>

#include "schlicht/errors.hpp"

namespace schlicht {

namespace {

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

MembershipVerdict run_class_oracle(const TaylorSeries& f, FamilyId family,
                                   const DiskGrid& grid) {
  if (family == FamilyId::koebe_family) return membership_u(f, 1.0, grid);
  return membership_halfplane(f, HalfplaneKind::convex_shift, -0.5, grid);
}

Cx functional_on_family_hull(const FunctionalSpec& spec, FamilyId family,
                             const AtomicMeasure& mu) {
  Cx value(0.0, 0.0);
  for (const Atom& a : mu.atoms())
    value += Cx(a.weight, 0.0) * G_of_x(spec, family, a.x);
  return value;
}

}  // namespace

CertifyConfig default_config() {
  CertifyConfig config;
  if (const char* env = std::getenv("SCHLICHT_SEED")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != env && end != nullptr && *end == '\0')
      config.seed = static_cast<std::uint64_t>(parsed);
  }
  return config;
}

FunctionalSpec second_coeff_functional(const CirclePoint& x0) {
  return FunctionalSpec::finite({Cx(0.0, 0.0), std::conj(x0.value())});
}

SupportCertificate certify_extreme_support(
    const CirclePoint& x0, FamilyId family, const CertifyConfig& config,
    const std::optional<FunctionalSpec>& functional_override) {
  const FunctionalSpec spec =
      functional_override ? *functional_override : second_coeff_functional(x0);
  const TaylorSeries f = family_series(family, x0, config.order);
  const MembershipVerdict membership = run_class_oracle(f, family, config.grid);
  const CircleMaxResult max =
      maximize_on_circle(spec, family, config.coarse_samples, config.refine_tol);
  const double cv = G_of_x(spec, family, x0).real();

  SupportCertificate cert{spec,    family,         f,
                          max.max_value, cv,       !max.is_constant,
                          membership,    max.maximizers,
                          CertVerdict::rejected,   "",
                          std::nullopt,  config};
  if (max.is_constant) {
    cert.reason = "functional is constant on the family";
    return cert;
  }
  if (membership.verdict != Verdict::holds_on_grid) {
    cert.reason = "class membership violated on the grid";
    return cert;
  }
  const double scale = std::max(1.0, std::abs(max.max_value));
  if (std::abs(cv - max.max_value) > config.cert_tol * scale) {
    cert.reason = "candidate does not attain the circle maximum";
    return cert;
  }
  cert.verdict = CertVerdict::certified_support_point;
  cert.reason = "extremal candidate attains the circle maximum and passes the class oracle";
  return cert;
}

HullSupportSet hull_support_set(const FunctionalSpec& spec, FamilyId family,
                                const CertifyConfig& config) {
  const CircleMaxResult max =
      maximize_on_circle(spec, family, config.coarse_samples, config.refine_tol);
  if (max.is_constant)
    throw NonconstantRequiredError("hull support set requires a nonconstant functional");

  std::mt19937_64 rng(config.seed);
  const double scale = std::max(1.0, std::abs(max.max_value));
  HullValidation validation{8, 0, 8, 0, false};

  // On-support draws: random mixtures of maximizer atoms must attain the maximum.
  for (int d = 0; d < validation.on_draws; ++d) {
    std::vector<Atom> atoms;
    double total = 0.0;
    std::vector<double> raw;
    raw.reserve(max.maximizers.size());
    for (std::size_t k = 0; k < max.maximizers.size(); ++k) {
      raw.push_back(u01(rng) + 0.05);
      total += raw.back();
    }
    for (std::size_t k = 0; k < max.maximizers.size(); ++k)
      atoms.push_back({raw[k] / total, CirclePoint(max.maximizers[k])});
    const Cx v = functional_on_family_hull(spec, family, AtomicMeasure(atoms));
    if (std::abs(v.real() - max.max_value) <= 1e-8 * scale) ++validation.on_passes;
  }

  // Off-support draws: mixing in mass away from every maximizer must lose value.
  for (int d = 0; d < validation.off_draws; ++d) {
    double theta_off = 0.0;
    bool found = false;
    for (int tries = 0; tries < 64 && !found; ++tries) {
      theta_off = u01(rng) * kTwoPi;
      found = true;
      for (double m : max.maximizers)
        if (angular_distance(CirclePoint(theta_off), CirclePoint(m)) < 0.1) {
          found = false;
          break;
        }
    }
    if (!found) continue;
    const double w = 0.2 + 0.6 * u01(rng);
    const AtomicMeasure mu({{1.0 - w, CirclePoint(max.maximizers.front())},
                            {w, CirclePoint(theta_off)}});
    const Cx v = functional_on_family_hull(spec, family, mu);
    if (v.real() <= max.max_value - 1e-10 * scale) ++validation.off_passes;
  }
  validation.ok = validation.on_passes == validation.on_draws &&
                  validation.off_passes == validation.off_draws;

  return {max.maximizers, max.max_value,
          "all AtomicMeasures supported on maximizers", validation};
}

SupportCertificate certify_candidate(const FunctionalSpec& spec, FamilyId family,
                                     const AtomicMeasure& mu,
                                     const CertifyConfig& config, bool class_level) {
  const TaylorSeries f = hull_member(mu, family, config.order);
  const MembershipVerdict membership = run_class_oracle(f, family, config.grid);
  const CircleMaxResult max =
      maximize_on_circle(spec, family, config.coarse_samples, config.refine_tol);
  const double cv = functional_on_family_hull(spec, family, mu).real();

  SupportCertificate cert{spec,    family,         mu,
                          max.max_value, cv,       !max.is_constant,
                          membership,    max.maximizers,
                          CertVerdict::rejected,   "",
                          std::nullopt,  config};

  const std::vector<PoleReport> poles = pole_set(mu);
  const bool multi = poles.size() >= 2;
  if (multi) {
    ObstructionEvidence evidence{poles, std::nullopt};
    const InjectivityReport probe =
        injectivity_probe(f, config.grid, config.separation_tol);
    if (!probe.injective_on_grid) evidence.collision = probe.collision;
    cert.evidence = std::move(evidence);
  }

  if (max.is_constant) {
    cert.reason = "functional is constant on the family";
    return cert;
  }
  const double scale = std::max(1.0, std::abs(max.max_value));
  if (std::abs(cv - max.max_value) > config.cert_tol * scale) {
    cert.reason = "candidate does not attain the circle maximum";
    return cert;
  }
  if (multi) {
    if (class_level) {
      cert.reason = "univalence obstruction";
      return cert;
    }
    cert.verdict = CertVerdict::certified_hull_support_point;
    cert.reason = "mixture attains the circle maximum over the hull";
    return cert;
  }
  if (membership.verdict != Verdict::holds_on_grid) {
    cert.reason = "class membership violated on the grid";
    return cert;
  }
  cert.verdict = CertVerdict::certified_support_point;
  cert.reason = "extremal candidate attains the circle maximum and passes the class oracle";
  return cert;
}

std::vector<SupportCertificate> class_support_filter(
    const FunctionalSpec& spec, FamilyId family, const CertifyConfig& config) {
  const HullSupportSet hull = hull_support_set(spec, family, config);
  std::vector<SupportCertificate> certs;
  certs.reserve(hull.maximizers.size() + 1);
  for (double theta : hull.maximizers) {
    const AtomicMeasure point({{1.0, CirclePoint(theta)}});
    certs.push_back(certify_candidate(spec, family, point, config, true));
  }
  if (hull.maximizers.size() >= 2) {
    std::vector<Atom> atoms;
    const double w = 1.0 / static_cast<double>(hull.maximizers.size());
    for (double theta : hull.maximizers) atoms.push_back({w, CirclePoint(theta)});
    certs.push_back(certify_candidate(spec, family, AtomicMeasure(atoms), config, true));
  }
  return certs;
}

}  // namespace schlicht
