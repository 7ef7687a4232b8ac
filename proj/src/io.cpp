#include "napp/io.hpp"

#include <algorithm>
#include <set>

namespace napp {

Json element_to_json(const FieldElement& x) {
  if (x.field().is_finite()) return x.code();
  return x.str();
}

FieldElement element_from_json(const Json& j, const FieldSpec& spec) {
  if (j.is_number_integer()) {
    if (spec.is_finite()) return spec.element(j.get<std::int64_t>());
    return spec.from_integer(j.get<std::int64_t>());
  }
  if (j.is_string()) return spec.parse_element(j.get<std::string>());
  throw error("expected an element encoding (integer or string)");
}

Json table_to_json(const FunctionTable& table) {
  Json arr = Json::array();
  for (const FieldElement& v : table.values()) arr.push_back(element_to_json(v));
  return arr;
}

FunctionTable table_from_json(const Json& j, const FieldSpec& spec, int dim) {
  if (!j.is_array()) throw error("table JSON must be an array of element encodings");
  std::vector<FieldElement> values;
  values.reserve(j.size());
  for (const Json& e : j) values.push_back(element_from_json(e, spec));
  return FunctionTable(spec, dim, std::move(values));
}

Json point_to_json(const Point& p) {
  Json arr = Json::array();
  for (const FieldElement& x : p) arr.push_back(element_to_json(x));
  return arr;
}

Point point_from_json(const Json& j, const FieldSpec& spec, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw error("point JSON must be an array of " + std::to_string(dim) + " encodings");
  Point p;
  p.reserve(dim);
  for (const Json& e : j) p.push_back(element_from_json(e, spec));
  return p;
}

Json form_to_json(const SymmetricForm& phi) {
  Json j;
  j["n"] = phi.arity();
  j["d"] = phi.dim();
  j["field"] = phi.field().name();
  Json values = Json::array();
  for (const auto& [idx, val] : phi.values()) {
    Json entry;
    entry["idx"] = idx;
    entry["val"] = element_to_json(val);
    values.push_back(std::move(entry));
  }
  j["values"] = std::move(values);
  return j;
}

SymmetricForm form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("field"))
    throw error("form JSON must carry n, d, field and values");
  const FieldSpec& spec = FieldSpec::parse(j.at("field").get<std::string>());
  SymmetricForm phi(spec, j.at("n").get<int>(), j.at("d").get<int>());
  std::set<std::vector<int>> seen;
  if (j.contains("values")) {
    for (const Json& entry : j.at("values")) {
      std::vector<int> idx = entry.at("idx").get<std::vector<int>>();
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != idx)
        throw error("form index tuple " + Json(idx).dump() + " is not non-decreasing");
      if (!seen.insert(sorted).second)
        throw error("duplicate form index tuple " + Json(idx).dump());
      phi.set_basis_value(std::move(sorted), element_from_json(entry.at("val"), spec));
    }
  }
  return phi;  // absent tuples stay zero
}

Json defect_table_to_json(const DefectTable& table) {
  const FieldSpec& spec = *table.spec;
  const std::uint64_t points = [&] {
    std::uint64_t v = 1;
    for (int i = 0; i < table.dim; ++i) v *= static_cast<std::uint64_t>(spec.q());
    return v;
  }();
  Json arr = Json::array();
  for (std::uint64_t t = 0; t < table.values.size(); ++t) {
    Json args = Json::array();
    std::uint64_t rem = t;
    std::vector<std::uint64_t> idx(table.n);
    for (int i = table.n - 1; i >= 0; --i) {
      idx[i] = rem % points;
      rem /= points;
    }
    for (int i = 0; i < table.n; ++i)
      args.push_back(point_to_json(point_at_index(spec, table.dim, idx[i])));
    Json entry;
    entry["args"] = std::move(args);
    entry["value"] = element_to_json(table.values[t]);
    arr.push_back(std::move(entry));
  }
  return arr;
}

Json chains_to_json(const MultiExponent& m, const FieldSpec& spec,
                    const ChainsResult& result) {
  Json j;
  j["multiexponent"] = m.str();
  j["characteristic"] = spec.is_rational() ? "inf" : std::to_string(spec.p());
  j["length"] = result.length;
  Json chains = Json::array();
  for (const RegularChain& c : result.chains) chains.push_back(c.str());
  j["chains"] = std::move(chains);
  return j;
}

namespace {

Json semantic_to_json(const SemanticCheckResult& s) {
  Json j;
  switch (s.status) {
    case SemanticCheckResult::Status::passed: j["status"] = "passed"; break;
    case SemanticCheckResult::Status::failed: j["status"] = "failed"; break;
    case SemanticCheckResult::Status::skipped: j["status"] = "skipped"; break;
  }
  if (!s.skip_reason.empty()) {
    j["reason"] = s.skip_reason;
    return j;
  }
  j["scaling_mode"] = s.scaling_mode;
  j["linearity_mode"] = s.linearity_mode;
  j["seed"] = s.seed;
  j["samples"] = s.samples;
  if (!s.witness.empty()) j["witness"] = s.witness;
  return j;
}

}  // namespace

Json report_to_json(const ClassificationReport& report, const FieldSpec& spec, int dim,
                    const std::string& poly_text) {
  Json j;
  j["field"] = spec.name();
  j["dim"] = dim;
  j["n"] = report.n;
  j["polynomial"] = poly_text;
  j["degree"] = report.degree;
  j["comb_degree"] = report.comb_degree;
  j["pl"] = report.pl;
  j["tpl"] = report.tpl;
  if (report.tpl_offending) j["tpl_offending_monomial"] = report.tpl_offending->str();
  j["dpl"] = report.dpl;
  if (report.dpl_offending) j["dpl_offending_monomial"] = report.dpl_offending->str();
  j["is_n_application"] = report.is_n_application;
  j["homogeneous_of_degree_n"] = report.homogeneous_of_degree_n;
  j["semantic_check"] = semantic_to_json(report.semantic);
  return j;
}

Json demo_to_json(const QuadraticDemoReport& r) {
  Json j;
  j["field"] = r.field;
  j["dim"] = r.dim;
  j["char_two"] = r.char_two;
  j["form_count"] = r.form_count;
  j["napp_count"] = r.napp_count;
  j["kernel_count"] = r.kernel_count;
  j["mapped_all_are_2_applications"] = r.mapped_all_are_napps;
  j["all_forms_recovered"] = r.all_recovered;
  j["injective"] = r.injective;
  j["bijective"] = r.bijective;
  j["fibered"] = r.fibered;
  if (!r.nonuniqueness.empty()) j["nonuniqueness_witness"] = r.nonuniqueness;
  return j;
}

Json dimension_to_json(const DimensionReport& r) {
  Json j;
  j["field"] = r.field;
  j["dim"] = r.dim;
  j["n"] = r.n;
  j["dim_characteristic_forms"] = r.dim_characteristic_forms;
  j["dim_tpl_cap_dpl"] = r.dim_tpl_dpl;
  j["dim_pl_cap_dpl"] = r.dim_pl_dpl;
  j["equal"] = r.equal;
  return j;
}

}  // namespace napp
