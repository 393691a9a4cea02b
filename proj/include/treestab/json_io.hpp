#pragma once

// JSON encodings for certificates and verdicts. Rationals travel as strings ("3/2")
// and polynomials in their canonical text form.

#include "treestab/dh.hpp"
#include "treestab/polynomial.hpp"
#include "treestab/stability.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace treestab {

using Json = nlohmann::json;

class JsonFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const Json& j);

/// {"op":"start","u":0,"v":1}, {"op":"add_pendant","new":2,"anchor":0},
/// {"op":"add_false_twin","new":3,"of":1}, {"op":"add_true_twin","new":4,"of":2}
Json to_json(const ConstructionStep& step);
ConstructionStep step_from_json(const Json& j);
/// One JSON object per line.
std::string to_json_lines(const ConstructionSequence& seq);
ConstructionSequence sequence_from_json_lines(std::string_view text);

/// {"kind":"house","vertices":[...]}
Json to_json(const ForbiddenWitness& w);
ForbiddenWitness witness_from_json(const Json& j);

/// {"nvars":5,"factors":[[0,1,2],[1,3]]}
Json to_json(const FactoredForm& f);
FactoredForm factored_from_json(const Json& j);

Json to_json(const RefutationOp& op);
RefutationOp op_from_json(const Json& j);

/// {"subgraph":[...],"ops":[...],"terminal":{"kind":"exact_zero","point":[...]}}
Json to_json(const RefutationCertificate& c);
RefutationCertificate certificate_from_json(const Json& j);

/// Verdict document. Optional "polynomial"/"reduced" fields are informational only.
Json to_json(const StabilityVerdict& v);

}  // namespace treestab
