#pragma once

#include <string>
#include <vector>

#include "schlicht/certify.hpp"
#include "schlicht/families.hpp"
#include "schlicht/functionals.hpp"
#include "schlicht/oracles.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

// String-level serialization; malformed or mistyped input throws ParseError.
// Finite doubles round-trip bit-exactly.

std::string series_to_json(const TaylorSeries& f);
TaylorSeries series_from_json(const std::string& text);

std::string verdict_to_json(const MembershipVerdict& verdict);

std::string measure_to_json(const AtomicMeasure& mu);
AtomicMeasure measure_from_json(const std::string& text);

std::string functional_to_json(const FunctionalSpec& spec);
FunctionalSpec functional_from_json(const std::string& text);

std::string certificate_to_json(const SupportCertificate& cert);
std::string certificates_to_json(const std::vector<SupportCertificate>& certs);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_summary_to_json(const CircleMaxResult& result, const std::string& csv_path);

std::string error_json(const std::string& message);

}  // namespace schlicht
