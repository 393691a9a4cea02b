#include "treestab/json_io.hpp"

#include <sstream>

namespace treestab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw JsonFormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

Vertex vertex_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw JsonFormatError(std::string("field '") + key + "' must be an integer");
    return v.get<Vertex>();
}

std::size_t index_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned()) throw JsonFormatError(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

Rational rational_from_json(const Json& j) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
    } catch (const PolyError& e) {
        throw JsonFormatError(e.what());
    }
    throw JsonFormatError("rational must be a string like \"3/2\" or an integer");
}

std::vector<Vertex> vertex_list(const Json& j) {
    if (!j.is_array()) throw JsonFormatError("vertex list must be an array");
    std::vector<Vertex> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw JsonFormatError("vertex list entries must be integers");
        out.push_back(v.get<Vertex>());
    }
    return out;
}

}  // namespace

Json to_json(const GaussianRational& z) {
    return Json{{"re", render_rational(z.re)}, {"im", render_rational(z.im)}};
}

GaussianRational gaussian_from_json(const Json& j) {
    return {rational_from_json(field(j, "re")), rational_from_json(field(j, "im"))};
}

Json to_json(const ConstructionStep& step) {
    return std::visit(Overloaded{[](const StartStep& s) { return Json{{"op", "start"}, {"u", s.u}, {"v", s.v}}; },
                                 [](const AddPendant& s) {
                                     return Json{{"op", "add_pendant"}, {"new", s.added}, {"anchor", s.anchor}};
                                 },
                                 [](const AddFalseTwin& s) {
                                     return Json{{"op", "add_false_twin"}, {"new", s.added}, {"of", s.of}};
                                 },
                                 [](const AddTrueTwin& s) {
                                     return Json{{"op", "add_true_twin"}, {"new", s.added}, {"of", s.of}};
                                 }},
                      step);
}

ConstructionStep step_from_json(const Json& j) {
    const Json& op = field(j, "op");
    if (!op.is_string()) throw JsonFormatError("'op' must be a string");
    const std::string name = op.get<std::string>();
    if (name == "start") return StartStep{vertex_field(j, "u"), vertex_field(j, "v")};
    if (name == "add_pendant") return AddPendant{vertex_field(j, "new"), vertex_field(j, "anchor")};
    if (name == "add_false_twin") return AddFalseTwin{vertex_field(j, "new"), vertex_field(j, "of")};
    if (name == "add_true_twin") return AddTrueTwin{vertex_field(j, "new"), vertex_field(j, "of")};
    throw JsonFormatError("unknown construction op '" + name + "'");
}

std::string to_json_lines(const ConstructionSequence& seq) {
    std::string out;
    for (const auto& step : seq.steps) out += to_json(step).dump() + "\n";
    return out;
}

ConstructionSequence sequence_from_json_lines(std::string_view text) {
    ConstructionSequence seq;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            seq.steps.push_back(step_from_json(Json::parse(line)));
        } catch (const Json::exception& e) {
            throw JsonFormatError("line " + std::to_string(line_no) + ": " + e.what());
        } catch (const JsonFormatError& e) {
            throw JsonFormatError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return seq;
}

Json to_json(const ForbiddenWitness& w) { return Json{{"kind", to_string(w.kind)}, {"vertices", w.vertices}}; }

ForbiddenWitness witness_from_json(const Json& j) {
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) throw JsonFormatError("'kind' must be a string");
    try {
        return {forbidden_kind_from_string(kind.get<std::string>()), vertex_list(field(j, "vertices"))};
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(e.what());
    }
}

Json to_json(const FactoredForm& f) {
    Json factors = Json::array();
    for (const auto& s : f.factors) factors.push_back(s.members());
    return Json{{"nvars", f.nvars}, {"factors", factors}};
}

FactoredForm factored_from_json(const Json& j) {
    FactoredForm f;
    f.nvars = index_field(j, "nvars");
    const Json& factors = field(j, "factors");
    if (!factors.is_array()) throw JsonFormatError("'factors' must be an array");
    for (const auto& s : factors) f.factors.emplace_back(vertex_list(s));
    return f;
}

Json to_json(const RefutationOp& op) {
    return std::visit(
        Overloaded{[](const SubstituteReal& s) {
                       return Json{{"op", "substitute_real"}, {"var", s.var}, {"value", render_rational(s.value)}};
                   },
                   [](const IdentifyVariables& s) { return Json{{"op", "identify_variables"}, {"map", s.map}, {"k", s.k}}; },
                   [](const ReverseVariable& s) { return Json{{"op", "reverse_variable"}, {"var", s.var}}; },
                   [](const PartialDerivative& s) { return Json{{"op", "partial_derivative"}, {"var", s.var}}; }},
        op);
}

RefutationOp op_from_json(const Json& j) {
    const Json& op = field(j, "op");
    if (!op.is_string()) throw JsonFormatError("'op' must be a string");
    const std::string name = op.get<std::string>();
    if (name == "substitute_real") return SubstituteReal{index_field(j, "var"), rational_from_json(field(j, "value"))};
    if (name == "reverse_variable") return ReverseVariable{index_field(j, "var")};
    if (name == "partial_derivative") return PartialDerivative{index_field(j, "var")};
    if (name == "identify_variables") {
        const Json& map = field(j, "map");
        if (!map.is_array()) throw JsonFormatError("'map' must be an array");
        IdentifyVariables out;
        for (const auto& t : map) {
            if (!t.is_number_unsigned()) throw JsonFormatError("'map' entries must be non-negative integers");
            out.map.push_back(t.get<std::size_t>());
        }
        out.k = index_field(j, "k");
        return out;
    }
    throw JsonFormatError("unknown refutation op '" + name + "'");
}

Json to_json(const RefutationCertificate& c) {
    Json ops = Json::array();
    for (const auto& op : c.ops) ops.push_back(to_json(op));
    Json terminal = std::visit(Overloaded{[](const ExactZero& z) {
                                              Json point = Json::array();
                                              for (const auto& x : z.point) point.push_back(to_json(x));
                                              return Json{{"kind", "exact_zero"}, {"point", point}};
                                          },
                                          [](const NonRealRootedUnivariate&) {
                                              return Json{{"kind", "non_real_rooted_univariate"}};
                                          }},
                               c.terminal);
    return Json{{"subgraph", c.subgraph.members()}, {"ops", ops}, {"terminal", terminal}};
}

RefutationCertificate certificate_from_json(const Json& j) {
    RefutationCertificate c;
    std::vector<Vertex> members = vertex_list(field(j, "subgraph"));
    c.subgraph = VertexSet(members);
    if (c.subgraph.size() != members.size()) throw JsonFormatError("certificate subgraph repeats a vertex");
    const Json& ops = field(j, "ops");
    if (!ops.is_array()) throw JsonFormatError("'ops' must be an array");
    for (const auto& op : ops) c.ops.push_back(op_from_json(op));

    const Json& terminal = field(j, "terminal");
    const Json& kind = field(terminal, "kind");
    if (kind == "exact_zero") {
        const Json& point = field(terminal, "point");
        if (!point.is_array()) throw JsonFormatError("'point' must be an array");
        ExactZero z;
        for (const auto& x : point) z.point.push_back(gaussian_from_json(x));
        c.terminal = z;
    } else if (kind == "non_real_rooted_univariate") {
        c.terminal = NonRealRootedUnivariate{};
    } else {
        throw JsonFormatError("unknown terminal kind");
    }
    return c;
}

Json to_json(const StabilityVerdict& v) {
    Json out{{"stable", v.stable}};
    if (v.sequence) {
        Json steps = Json::array();
        for (const auto& s : v.sequence->steps) steps.push_back(to_json(s));
        out["sequence"] = steps;
    }
    if (v.factored) out["factored"] = to_json(*v.factored);
    if (v.witness) out["witness"] = to_json(*v.witness);
    if (v.refutation) out["certificate"] = to_json(*v.refutation);
    return out;
}

}  // namespace treestab
