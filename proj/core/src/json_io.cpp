#include "schlicht/json_io.hpp"

#include <cstdio>

#include <json.hpp>

#include "schlicht/errors.hpp"

namespace schlicht {

namespace {

using Json = nlohmann::ordered_json;

Json cx_to_json(Cx v) { return Json::array({v.real(), v.imag()}); }

Cx cx_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a [re, im] pair");
  return Cx(j[0].get<double>(), j[1].get<double>());
}

Json parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field: ") + key);
  return *it;
}

Json grid_to_json(const DiskGrid& grid) {
  Json j;
  j["radii"] = grid.radii();
  j["angles_per_radius"] = grid.angles_per_radius();
  return j;
}

Json verdict_to_json_obj(const MembershipVerdict& verdict) {
  Json j;
  j["verdict"] = verdict.verdict == Verdict::holds_on_grid ? "holds_on_grid" : "violated";
  j["margin"] = verdict.margin;
  j["witness"] = cx_to_json(verdict.witness.value());
  j["tail_bound"] = verdict.tail_bound;
  j["grid"] = grid_to_json(verdict.grid);
  j["conditional"] = verdict.conditional;
  return j;
}

Json series_to_json_obj(const TaylorSeries& f) {
  Json coeffs = Json::array();
  for (const Cx& c : f.coeffs()) coeffs.push_back(cx_to_json(c));
  Json j;
  j["order"] = f.order();
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json measure_to_json_obj(const AtomicMeasure& mu) {
  Json atoms = Json::array();
  for (const Atom& a : mu.atoms()) {
    Json atom;
    atom["lambda"] = a.weight;
    atom["theta"] = a.x.theta();
    atoms.push_back(std::move(atom));
  }
  Json j;
  j["atoms"] = std::move(atoms);
  return j;
}

Json functional_to_json_obj(const FunctionalSpec& spec) {
  Json j;
  if (spec.is_generator()) {
    Json gen;
    gen["c"] = cx_to_json(spec.generator_c());
    gen["rho"] = spec.generator_rho();
    j["generator"] = std::move(gen);
  } else {
    Json b = Json::array();
    for (const Cx& c : spec.finite_coeffs()) b.push_back(cx_to_json(c));
    j["b"] = std::move(b);
  }
  return j;
}

Json config_to_json(const CertifyConfig& config) {
  Json j;
  j["order"] = config.order;
  j["grid"] = grid_to_json(config.grid);
  j["coarse_samples"] = config.coarse_samples;
  j["refine_tol"] = config.refine_tol;
  j["cert_tol"] = config.cert_tol;
  j["separation_tol"] = config.separation_tol;
  j["seed"] = config.seed;
  return j;
}

const char* verdict_name(CertVerdict verdict) {
  switch (verdict) {
    case CertVerdict::certified_support_point: return "certified_support_point";
    case CertVerdict::certified_hull_support_point: return "certified_hull_support_point";
    default: return "rejected";
  }
}

Json certificate_to_json_obj(const SupportCertificate& cert) {
  Json j;
  j["functional"] = functional_to_json_obj(cert.functional);
  j["family"] = cert.family == FamilyId::koebe_family ? "koebe_family" : "g_family";
  Json candidate;
  if (const TaylorSeries* f = std::get_if<TaylorSeries>(&cert.candidate))
    candidate["series"] = series_to_json_obj(*f);
  else
    candidate["measure"] = measure_to_json_obj(std::get<AtomicMeasure>(cert.candidate));
  j["candidate"] = std::move(candidate);
  j["max_value"] = cert.max_value;
  j["candidate_value"] = cert.candidate_value;
  j["nonconstant"] = cert.nonconstant;
  j["class_membership"] = verdict_to_json_obj(cert.class_membership);
  j["maximizers"] = cert.maximizers;
  j["verdict"] = verdict_name(cert.verdict);
  j["reason"] = cert.reason;
  if (cert.evidence) {
    Json evidence;
    Json poles = Json::array();
    for (const PoleReport& p : cert.evidence->poles) {
      Json pole;
      pole["location"] = cx_to_json(p.location);
      pole["order"] = p.order;
      poles.push_back(std::move(pole));
    }
    evidence["poles"] = std::move(poles);
    if (cert.evidence->collision) {
      const CollisionWitness& c = *cert.evidence->collision;
      Json collision;
      collision["z1"] = cx_to_json(c.z1);
      collision["z2"] = cx_to_json(c.z2);
      collision["f1"] = cx_to_json(c.f1);
      collision["f2"] = cx_to_json(c.f2);
      collision["residual"] = c.residual;
      evidence["collision"] = std::move(collision);
    }
    j["evidence"] = std::move(evidence);
  }
  j["config"] = config_to_json(cert.config);
  return j;
}

}  // namespace

std::string series_to_json(const TaylorSeries& f) {
  return series_to_json_obj(f).dump(2);
}

TaylorSeries series_from_json(const std::string& text) {
  const Json j = parse(text);
  try {
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) throw ParseError("coeffs must be an array");
    std::vector<Cx> out;
    out.reserve(coeffs.size());
    for (const Json& c : coeffs) out.push_back(cx_from_json(c));
    const Json& order = field(j, "order");
    if (!order.is_number_integer() ||
        order.get<int>() + 1 != static_cast<int>(out.size()))
      throw ParseError("order does not match coeffs length");
    return TaylorSeries(std::move(out));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid series: ") + e.what());
  }
}

std::string verdict_to_json(const MembershipVerdict& verdict) {
  return verdict_to_json_obj(verdict).dump(2);
}

std::string measure_to_json(const AtomicMeasure& mu) {
  return measure_to_json_obj(mu).dump(2);
}

AtomicMeasure measure_from_json(const std::string& text) {
  const Json j = parse(text);
  try {
    const Json& atoms = field(j, "atoms");
    if (!atoms.is_array()) throw ParseError("atoms must be an array");
    std::vector<Atom> out;
    out.reserve(atoms.size());
    for (const Json& a : atoms) {
      if (!a.is_object()) throw ParseError("each atom must be an object");
      const Json& lambda = field(a, "lambda");
      const Json& theta = field(a, "theta");
      if (!lambda.is_number() || !theta.is_number())
        throw ParseError("atom fields must be numbers");
      out.push_back({lambda.get<double>(), CirclePoint(theta.get<double>())});
    }
    return AtomicMeasure(std::move(out));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid measure: ") + e.what());
  }
}

std::string functional_to_json(const FunctionalSpec& spec) {
  return functional_to_json_obj(spec).dump(2);
}

FunctionalSpec functional_from_json(const std::string& text) {
  const Json j = parse(text);
  try {
    if (j.contains("generator")) {
      const Json& gen = field(j, "generator");
      const Json& rho = field(gen, "rho");
      if (!rho.is_number()) throw ParseError("generator rho must be a number");
      return FunctionalSpec::generator(cx_from_json(field(gen, "c")), rho.get<double>());
    }
    const Json& b = field(j, "b");
    if (!b.is_array()) throw ParseError("b must be an array");
    std::vector<Cx> coeffs;
    coeffs.reserve(b.size());
    for (const Json& c : b) coeffs.push_back(cx_from_json(c));
    return FunctionalSpec::finite(std::move(coeffs));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid functional: ") + e.what());
  }
}

std::string certificate_to_json(const SupportCertificate& cert) {
  return certificate_to_json_obj(cert).dump(2);
}

std::string certificates_to_json(const std::vector<SupportCertificate>& certs) {
  Json arr = Json::array();
  for (const SupportCertificate& cert : certs)
    arr.push_back(certificate_to_json_obj(cert));
  Json j;
  j["certificates"] = std::move(arr);
  return j.dump(2);
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "theta,reG,imG,H\n";
  char line[160];
  for (const SweepRow& row : rows) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n",
                  row.theta, row.g.real(), row.g.imag(), row.h);
    out += line;
  }
  return out;
}

std::string sweep_summary_to_json(const CircleMaxResult& result, const std::string& csv_path) {
  Json j;
  j["max_value"] = result.max_value;
  j["maximizers"] = result.maximizers;
  j["is_constant"] = result.is_constant;
  j["samples"] = result.samples;
  if (!csv_path.empty()) j["csv"] = csv_path;
  return j.dump(2);
}

std::string error_json(const std::string& message) {
  Json j;
  j["error"] = message;
  return j.dump(2);
}

}  // namespace schlicht
