#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "asreg/ec.hpp"
#include "asreg/oracle.hpp"
#include "asreg/tables.hpp"

namespace asreg {

// Insertion-ordered so that serialization is deterministic and documented:
// monomials appear in row-major / deg-lex order, fields in declaration order.
using Json = nlohmann::ordered_json;

// A classifiable algebra: either a table row instance or a Type-EC datum.
using Descriptor = std::variant<TypedAlgebra, EcDescriptor>;

// Points serialize as arrays of canonical coordinate strings: ["1","-1","0"].
Json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j);

// A relation set is an array of 3 objects, each a sparse map from basis
// monomial "x*y" to a coefficient string, e.g. {"y*z":"1","z*y":"-2"}.
Json relations_to_json(const RelationSet& r);
RelationSet relations_from_json(const Json& j);

// Sparse map in deg-lex order, e.g. {"x^3":"1","x*y*z":"-6"}.
Json cubic_to_json(const CubicForm& f);

// {"type":"S1","params":["2","3","5"]} or
// {"type":"EC","point":["1","2","3"],"i":1,"regularity":"undecided"}.
Json descriptor_to_json(const Descriptor& d);
Descriptor descriptor_from_json(const Json& j);

// Parses JSON text and then the descriptor; malformed JSON is reported as
// InvalidParameters so the CLI treats it as a validation failure.
Descriptor parse_descriptor(const std::string& text);
Json parse_json(const std::string& text);

Json g1_report_to_json(const std::vector<G1Entry>& report);

// {"error":{"code":"TorsionPoint","message":"..."}}
Json error_json(const Error& e);

}  // namespace asreg
