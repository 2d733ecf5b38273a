#include "json_io.hpp"

#include <json.hpp>

#include "catalog.hpp"

namespace jclean {

using json = nlohmann::ordered_json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON");
  return j;
}

std::uint32_t get_u32(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw input_error(std::string("ring spec: missing or invalid \"") + key + "\"");
  return j[key].get<std::uint32_t>();
}

std::vector<std::uint32_t> get_u32_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw input_error(std::string("ring spec: missing or invalid \"") + key + "\"");
  std::vector<std::uint32_t> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_unsigned())
      throw input_error(std::string("ring spec: \"") + key + "\" entries must be non-negative");
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

RingSpec spec_from(const json& j);

RingSpec spec_from(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw input_error("ring spec: expected an object with a \"kind\" string");
  std::string kind = j["kind"].get<std::string>();
  RingSpec spec;
  if (kind == "modular-integers") {
    spec.kind = RingSpec::Kind::Modular;
    spec.n = get_u32(j, "n");
  } else if (kind == "quotient-polynomial") {
    spec.kind = RingSpec::Kind::QuotientPoly;
    spec.p = get_u32(j, "p");
    spec.modulus = get_u32_array(j, "modulus");
  } else if (kind == "explicit-tables") {
    spec.kind = RingSpec::Kind::Tables;
    spec.add = get_u32_array(j, "add");
    spec.mul = get_u32_array(j, "mul");
    spec.zero = get_u32(j, "zero");
    spec.one = get_u32(j, "one");
  } else if (kind == "truncated-power-series") {
    spec.kind = RingSpec::Kind::Series;
    if (!j.contains("base")) throw input_error("ring spec: series needs a \"base\" ring");
    spec.base = std::make_shared<RingSpec>(spec_from(j["base"]));
    spec.precision = get_u32(j, "precision");
  } else {
    throw input_error("ring spec: unknown kind \"" + kind + "\"");
  }
  if (j.contains("names")) {
    if (!j["names"].is_array()) throw input_error("ring spec: \"names\" must be an array");
    for (const auto& v : j["names"]) {
      if (!v.is_string()) throw input_error("ring spec: \"names\" entries must be strings");
      spec.names.push_back(v.get<std::string>());
    }
  }
  return spec;
}

json spec_to(const RingSpec& spec) {
  json j;
  switch (spec.kind) {
    case RingSpec::Kind::Modular:
      j["kind"] = "modular-integers";
      j["n"] = spec.n;
      break;
    case RingSpec::Kind::QuotientPoly:
      j["kind"] = "quotient-polynomial";
      j["p"] = spec.p;
      j["modulus"] = spec.modulus;
      break;
    case RingSpec::Kind::Tables:
      j["kind"] = "explicit-tables";
      j["add"] = spec.add;
      j["mul"] = spec.mul;
      j["zero"] = spec.zero;
      j["one"] = spec.one;
      break;
    case RingSpec::Kind::Series:
      j["kind"] = "truncated-power-series";
      j["base"] = spec.base ? spec_to(*spec.base) : json(nullptr);
      j["precision"] = spec.precision;
      break;
  }
  if (!spec.names.empty()) j["names"] = spec.names;
  return j;
}

json names_of(const FiniteRing& r, const ElemSet& set) {
  json out = json::array();
  for (Elem x : set.items) out.push_back(r.name_of(x));
  return out;
}

Elem entry_from(const FiniteRing& r, const json& v) {
  if (v.is_string()) {
    std::string name = v.get<std::string>();
    if (auto e = r.find_name(name)) return *e;
    throw input_error("matrix: unknown element '" + name + "' in " + r.label());
  }
  if (v.is_number_unsigned()) {
    std::uint64_t idx = v.get<std::uint64_t>();
    if (idx < r.size()) return static_cast<Elem>(idx);
    throw input_error("matrix: index " + std::to_string(idx) + " out of range for " + r.label());
  }
  throw input_error("matrix: entries must be names or indices");
}

json cert_to(FmContext& ctx, const CleanCertificate& cert) {
  const FiniteRing& r = ctx.ring();
  json j;
  switch (cert.variant) {
    case CertVariant::Decomposition:
      j["variant"] = "decomposition";
      j["E"] = to_literal(r, cert.E);
      j["W"] = to_literal(r, cert.W);
      break;
    case CertVariant::RadicalMember:
      j["variant"] = "radical-member";
      break;
    case CertVariant::ComplementRadicalMember:
      j["variant"] = "complement-radical-member";
      break;
    case CertVariant::DiagonalSimilarity:
      j["variant"] = "diagonal-similarity";
      j["P"] = to_literal(r, cert.P);
      j["v"] = r.name_of(cert.v);
      j["w"] = r.name_of(cert.w);
      j["orientation"] = cert.orientation == 1 ? "diag(v,w)" : "diag(w,v)";
      break;
    case CertVariant::QuadraticRoots:
      j["variant"] = "quadratic-roots";
      if (cert.form) {
        json f;
        f["orientation"] = cert.form->orientation;
        f["u"] = r.name_of(cert.form->u);
        f["v"] = r.name_of(cert.form->v);
        f["w"] = r.name_of(cert.form->w);
        f["P"] = to_literal(r, cert.form->P);
        j["form"] = f;
      }
      j["root_in_1_plus_j"] = r.name_of(cert.root_one_plus_j);
      j["root_in_j"] = r.name_of(cert.root_j);
      break;
  }
  if (!cert.branch.empty()) j["branch"] = cert.branch;
  return j;
}

}  // namespace

RingSpec ring_spec_from_json(const std::string& text) { return spec_from(parse(text)); }

std::string ring_spec_to_json(const RingSpec& spec) { return spec_to(spec).dump(2); }

std::string analysis_to_json(const FiniteRing& r, const RingAnalysis& an) {
  json j;
  j["schema"] = 1;
  j["ring"] = r.label();
  j["size"] = r.size();
  j["commutative"] = an.commutative;
  j["local"] = an.local;
  if (an.local) {
    j["weakly_bleached"] = an.weakly_bleached;
    j["residue_size"] = an.residue_size;
  }
  if (an.nonlocal_witness)
    j["nonlocal_witness"] = json::array({r.name_of(an.nonlocal_witness->first),
                                         r.name_of(an.nonlocal_witness->second)});
  j["units"] = names_of(r, an.units);
  j["jacobson"] = names_of(r, an.jacobson);
  j["one_plus_j"] = names_of(r, an.one_plus_j);
  j["idempotents"] = names_of(r, an.idempotents);
  j["nilpotents"] = names_of(r, an.nilpotents);
  j["center"] = names_of(r, an.center);
  return j.dump(2);
}

FMatrix matrix_from_text(const FiniteRing& r, const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') {
    json j = parse(text);
    for (const char* key : {"a", "b", "c", "d"})
      if (!j.contains(key)) throw input_error("matrix object needs keys a, b, c, d");
    return {entry_from(r, j["a"]), entry_from(r, j["b"]), entry_from(r, j["c"]),
            entry_from(r, j["d"])};
  }
  return parse_matrix_literal(r, text);
}

std::string verdict_to_json(FmContext& ctx, const FMatrix& A, CleanKind kind,
                            const std::string& decided_by,
                            const std::optional<CleanCertificate>& cert,
                            std::optional<bool> agrees_with_oracle) {
  json j;
  j["schema"] = 1;
  j["kind"] = clean_kind_name(kind);
  j["ring"] = ctx.ring().label();
  j["s"] = ctx.ring().name_of(ctx.s());
  j["matrix"] = to_literal(ctx.ring(), A);
  j["result"] = cert ? "success" : "absent";
  j["decided_by"] = decided_by;
  j["certificate"] = cert ? cert_to(ctx, *cert) : json(nullptr);
  if (agrees_with_oracle) j["agrees_with_oracle"] = *agrees_with_oracle;
  return j.dump(2);
}

namespace {

json report_to(const CheckReport& rep) {
  json j;
  j["schema"] = 1;
  j["check"] = rep.check;
  j["ring"] = rep.ring;
  j["s"] = rep.s;
  j["status"] = check_status_name(rep.status);
  j["detail"] = rep.detail;
  j["counterexample"] = rep.counterexample.empty() ? json(nullptr) : json(rep.counterexample);
  j["checked"] = rep.checked;
  j["sampled"] = rep.sampled;
  j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

}  // namespace

std::string report_to_json(const CheckReport& rep) { return report_to(rep).dump(2); }

std::string reports_to_json(const std::vector<CheckReport>& reps) {
  json j = json::array();
  for (const auto& rep : reps) j.push_back(report_to(rep));
  return j.dump(2);
}

std::string census_csv_header() { return "ring,s,total,units,idempotents,jacobson,sc,sjc,snc"; }

std::string census_row_csv(const CensusRow& row) {
  return row.ring + "," + row.s + "," + std::to_string(row.total) + "," +
         std::to_string(row.units) + "," + std::to_string(row.idempotents) + "," +
         std::to_string(row.jacobson) + "," + std::to_string(row.sc) + "," +
         std::to_string(row.sjc) + "," + std::to_string(row.snc);
}

std::string catalog_to_json() {
  json j = json::array();
  for (const auto& e : catalog_entries()) {
    json row;
    row["name"] = e.name;
    row["description"] = e.description;
    j.push_back(row);
  }
  return j.dump(2);
}

}  // namespace jclean
