#ifndef EAG_IO_HPP
#define EAG_IO_HPP

// JSON and CSV forms of the library's values and reports. Every document
// carries "schema": "eag/1" and a "kind" tag.

#include "eag/generating_vector.hpp"
#include "eag/genvec.hpp"
#include "eag/group_table.hpp"
#include "eag/hyper_fermat.hpp"
#include "eag/maximality.hpp"
#include "eag/signature.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace eag::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "eag/1";

/// {"schema": "eag/1", "kind": kind, ...payload}.
Json document(std::string_view kind, Json payload);
/// The payload of a document, after checking schema and kind.
Json payload(const Json& doc, std::string_view kind);

Json to_json(const FpVector& v);
FpVector fp_vector_from_json(const Json& j, Prime p);

Json to_json(const GeneratingVector& v);
GeneratingVector generating_vector_from_json(const Json& j);

Json to_json(const Signature& s);
Signature signature_from_json(const Json& j);

Json to_json(const EAActionSpec& s);
EAActionSpec spec_from_json(const Json& j);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const ProjPoint<Complex>& z);
ProjPoint<Complex> point_from_json(const Json& j);

Json matrix_to_json(const Mat<Complex>& m);
Mat<Complex> complex_matrix_from_json(const Json& j);

Json to_json(const UniquenessReport& r);
UniquenessReport uniqueness_from_json(const Json& j);

Json to_json(const ClassCountReport& r);
ClassCountReport class_count_from_json(const Json& j);

Json to_json(const ExtensionWitness& w);
ExtensionWitness witness_from_json(const Json& j);

Json to_json(const MaximalityVerdict& v);
MaximalityVerdict verdict_from_json(const Json& j);

Json to_json(const OrbitCount& c);
OrbitCount orbit_count_from_json(const Json& j);

Json to_json(const FermatReport& r);
FermatReport fermat_from_json(const Json& j);

/// RFC 4180 quoting where needed.
std::string csv_field(std::string_view s);
std::string to_csv(const std::vector<std::vector<std::string>>& rows);

}  // namespace eag::io

#endif  // EAG_IO_HPP
