#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "schlicht/families.hpp"
#include "schlicht/functionals.hpp"
#include "schlicht/oracles.hpp"

namespace schlicht {

inline constexpr double kCertTol = 1e-8;
inline constexpr double kDefaultSeparationTol = 1e-2;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed0123456789abULL;

struct CertifyConfig {
  int order = kDefaultOrder;
  DiskGrid grid = default_grid();
  int coarse_samples = kDefaultCoarseSamples;
  double refine_tol = kDefaultRefineTol;
  double cert_tol = kCertTol;
  double separation_tol = kDefaultSeparationTol;
  std::uint64_t seed = kDefaultSeed;
};

// Default configuration; the seed honors SCHLICHT_SEED when set.
CertifyConfig default_config();

enum class CertVerdict { certified_support_point, certified_hull_support_point, rejected };

struct ObstructionEvidence {
  std::vector<PoleReport> poles;
  std::optional<CollisionWitness> collision;
};

struct SupportCertificate {
  FunctionalSpec functional;
  FamilyId family;
  std::variant<TaylorSeries, AtomicMeasure> candidate;
  double max_value;
  double candidate_value;  // Re J(candidate)
  bool nonconstant;
  MembershipVerdict class_membership;
  std::vector<double> maximizers;
  CertVerdict verdict;
  std::string reason;
  std::optional<ObstructionEvidence> evidence;
  CertifyConfig config;
};

// J(f) = conj(x0) a_2(f): the canonical functional maximized exactly at x0.
FunctionalSpec second_coeff_functional(const CirclePoint& x0);

SupportCertificate certify_extreme_support(
    const CirclePoint& x0, FamilyId family,
    const CertifyConfig& config = default_config(),
    const std::optional<FunctionalSpec>& functional_override = std::nullopt);

struct HullValidation {
  int on_draws;
  int on_passes;
  int off_draws;
  int off_passes;
  bool ok;
};

struct HullSupportSet {
  std::vector<double> maximizers;
  double max_value;
  std::string description;
  HullValidation validation;
};

HullSupportSet hull_support_set(const FunctionalSpec& spec, FamilyId family,
                                const CertifyConfig& config = default_config());

SupportCertificate certify_candidate(const FunctionalSpec& spec, FamilyId family,
                                     const AtomicMeasure& mu,
                                     const CertifyConfig& config = default_config(),
                                     bool class_level = false);

std::vector<SupportCertificate> class_support_filter(
    const FunctionalSpec& spec, FamilyId family,
    const CertifyConfig& config = default_config());

}  // namespace schlicht
