#include "adet/json_io.hpp"

namespace adet {

namespace {

std::vector<long long> json_int_row(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "point must be an array");
  std::vector<long long> out;
  for (const Json& v : j) {
    if (!v.is_number_integer())
      throw Error(ErrorCode::InvalidInput, "point entries must be integers");
    out.push_back(v.get<long long>());
  }
  return out;
}

Json indices_to_json(const std::vector<size_t>& idx) {
  Json out = Json::array();
  for (size_t i : idx) out.push_back(i + 1);  // 1-based for users
  return out;
}

}  // namespace

std::pair<std::string, PointConfiguration> parse_config(const Json& j) {
  if (!j.is_object())
    throw Error(ErrorCode::InvalidInput, "config must be a JSON object");
  std::string name = j.value("name", std::string("unnamed"));
  const bool has_points = j.contains("points");
  const bool has_aprime = j.contains("aprime");
  if (has_points == has_aprime)
    throw Error(ErrorCode::InvalidInput,
                "config needs exactly one of \"points\" or \"aprime\"");
  std::vector<std::vector<long long>> rows;
  const Json& arr = has_points ? j.at("points") : j.at("aprime");
  if (!arr.is_array() || arr.empty())
    throw Error(ErrorCode::InvalidInput, "point list must be a nonempty array");
  for (const Json& r : arr) {
    std::vector<long long> row = json_int_row(r);
    if (has_aprime) row.push_back(1);
    rows.push_back(std::move(row));
  }
  return {std::move(name), validate(rows)};
}

std::pair<std::string, PointConfiguration> parse_config_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorCode::InvalidInput, "config is not valid JSON");
  return parse_config(j);
}

std::vector<Rat> parse_alpha(const Json& j, size_t d) {
  if (!j.is_array())
    throw Error(ErrorCode::InvalidInput, "alpha must be a JSON array");
  if (j.size() != d)
    throw Error(ErrorCode::InvalidInput,
                "alpha has length " + std::to_string(j.size()) + ", expected " +
                    std::to_string(d));
  std::vector<Rat> out;
  out.reserve(d);
  for (const Json& v : j) {
    if (v.is_number_integer()) {
      out.push_back(Rat(v.get<long long>()));
    } else if (v.is_string()) {
      out.push_back(Rat::parse(v.get<std::string>()));
    } else {
      throw Error(ErrorCode::InvalidInput,
                  "alpha entries must be rational strings");
    }
  }
  return out;
}

Json alpha_to_json(const std::vector<Rat>& alpha) {
  Json out = Json::array();
  for (const Rat& r : alpha) out.push_back(r.to_string());
  return out;
}

Json face_to_json(const Face& f) {
  Json out;
  out["indices"] = indices_to_json(f.indices);
  out["dim"] = f.dim;
  if (f.functional) {
    Json fn;
    Json lambda = Json::array();
    for (const Int& x : f.functional->lambda) lambda.push_back(x.to_string());
    fn["lambda"] = std::move(lambda);
    fn["c"] = f.functional->c.to_string();
    out["functional"] = std::move(fn);
  }
  return out;
}

Json lattice_to_json(const std::string& name, const PointConfiguration& a,
                     const FaceLattice& lattice) {
  Json out;
  out["name"] = name;
  out["d"] = a.d;
  out["k"] = a.k;
  out["n"] = a.n;
  Json faces = Json::array();
  for (const Face& f : lattice.faces) faces.push_back(face_to_json(f));
  out["faces"] = std::move(faces);
  return out;
}

Json toric_to_json(const std::string& name, const ToricIdeal& toric) {
  Json out;
  out["name"] = name;
  out["variables"] = toric.registry.names();
  Json gens = Json::array();
  MonomialOrder grev = MonomialOrder::grevlex();
  for (const Polynomial& g : toric.generators)
    gens.push_back(render(g, toric.registry, grev));
  out["generators"] = std::move(gens);
  return out;
}

Json membership_to_json(const std::vector<Rat>& alpha, const MembershipVerdict& v) {
  Json out;
  out["alpha"] = alpha_to_json(alpha);
  out["in_vA"] = v.in_vA;
  Json wit = Json::array();
  for (const Face& f : v.witness_faces) wit.push_back(indices_to_json(f.indices));
  out["witnesses"] = std::move(wit);
  return out;
}

Json profile_to_json(const HilbertProfile& p) {
  Json out;
  out["dims"] = p.dims;
  if (p.reached_zero) {
    out["status"] = "reached_zero";
    out["zero_at"] = p.zero_at;
  } else {
    out["status"] = "cap_hit";
  }
  return out;
}

Json finiteness_to_json(const std::vector<Rat>& alpha, const FinitenessReport& r) {
  Json out;
  out["alpha"] = alpha_to_json(alpha);
  out["finite"] = r.finite;
  if (r.finite) out["dimension"] = r.dimension;
  if (r.profile) out["profile"] = profile_to_json(*r.profile);
  return out;
}

Json face_discriminant_to_json(const PointConfiguration& a,
                               const FaceDiscriminant& fd) {
  Json out;
  out["face"] = indices_to_json(fd.face.indices);
  VariableRegistry areg = alpha_registry(a);
  MonomialOrder grev = MonomialOrder::grevlex();
  if (fd.hypersurface) {
    out["status"] = "hypersurface";
    out["delta"] = render(fd.delta, areg, grev);
  } else {
    out["status"] = "not_hypersurface";
    Json ideal = Json::array();
    for (const Polynomial& p : fd.elimination_ideal)
      ideal.push_back(render(p, areg, grev));
    out["ideal"] = std::move(ideal);
  }
  return out;
}

Json ea_support_to_json(const PointConfiguration& a, const EASupport& s) {
  Json out;
  VariableRegistry areg = alpha_registry(a);
  MonomialOrder grev = MonomialOrder::grevlex();
  Json support = Json::array();
  for (const Polynomial& p : s.support) support.push_back(render(p, areg, grev));
  out["support"] = std::move(support);
  Json faces = Json::array();
  for (const FaceDiscriminant& fd : s.per_face)
    faces.push_back(face_discriminant_to_json(a, fd));
  out["faces"] = std::move(faces);
  return out;
}

Json report_to_json(const VerificationReport& r) {
  Json out;
  out["config"] = r.config_name;
  Json plan;
  plan["n_random"] = r.plan.n_random;
  plan["n_stratum_per_face"] = r.plan.n_stratum_per_face;
  plan["seed"] = r.plan.seed;
  plan["coeff_bound"] = r.plan.coeff_bound;
  plan["hilbert_cap_infinite"] = r.plan.hilbert_cap_infinite;
  plan["hilbert_window"] = r.plan.hilbert_window;
  plan["inject_bug"] = r.plan.inject_bug;
  out["plan"] = std::move(plan);
  Json results;
  for (const auto& [name, counter] : r.counters) {
    Json c;
    c["checked"] = counter.checked;
    c["failed"] = counter.failed;
    results[name] = std::move(c);
  }
  out["results"] = std::move(results);
  Json failures = Json::array();
  for (const FailureRecord& f : r.failures) {
    Json jf;
    jf["check"] = f.check;
    jf["sample"] = f.sample_index;
    jf["stratum"] = f.stratum;
    if (f.stratum) jf["face_pos"] = f.face_pos;
    jf["alpha"] = alpha_to_json(f.alpha);
    if (!f.witnesses.empty()) {
      Json wit = Json::array();
      for (const auto& w : f.witnesses) {
        Json one = Json::array();
        for (size_t i : w) one.push_back(i + 1);
        wit.push_back(std::move(one));
      }
      jf["witnesses"] = std::move(wit);
    }
    if (!f.profile_dims.empty()) jf["profile"] = f.profile_dims;
    jf["note"] = f.note;
    failures.push_back(std::move(jf));
  }
  out["failures"] = std::move(failures);
  out["total_failures"] = r.total_failures();
  return out;
}

Json error_to_json(const Error& e) {
  Json out;
  Json detail;
  detail["code"] = error_code_name(e.code());
  detail["message"] = e.what();
  if (e.index_a() >= 0) detail["index_a"] = e.index_a();
  if (e.index_b() >= 0) detail["index_b"] = e.index_b();
  out["error"] = std::move(detail);
  return out;
}

}  // namespace adet
