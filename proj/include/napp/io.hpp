#ifndef NAPP_IO_HPP
#define NAPP_IO_HPP

#include <string>

#include <json.hpp>

#include "napp/classify.hpp"

namespace napp {

using Json = nlohmann::ordered_json;

// element encodings: finite fields use their integer encoding, rationals the
// "num/den" literal
Json element_to_json(const FieldElement& x);
FieldElement element_from_json(const Json& j, const FieldSpec& spec);

// tables are flat arrays in lexicographic point order
Json table_to_json(const FunctionTable& table);
FunctionTable table_from_json(const Json& j, const FieldSpec& spec, int dim);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j, const FieldSpec& spec, int dim);

// {n, d, field, values: [{idx: [...], val: ...}]}
Json form_to_json(const SymmetricForm& phi);
SymmetricForm form_from_json(const Json& j);

// [{args: [[...], ...], value: ...}, ...]
Json defect_table_to_json(const DefectTable& table);

Json chains_to_json(const MultiExponent& m, const FieldSpec& spec,
                    const ChainsResult& result);
Json report_to_json(const ClassificationReport& report, const FieldSpec& spec, int dim,
                    const std::string& poly_text);
Json demo_to_json(const QuadraticDemoReport& report);
Json dimension_to_json(const DimensionReport& report);

}  // namespace napp

#endif
