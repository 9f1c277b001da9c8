#include "asreg/json_io.hpp"

namespace asreg {

namespace {

const char* kVarNames[3] = {"x", "y", "z"};

std::string monomial_key(int j, int k) {
    return std::string(kVarNames[j]) + "*" + kVarNames[k];
}

FieldElem field_from_json(const Json& j, const char* where) {
    if (!j.is_string()) {
        throw InvalidParameters(std::string(where) + " must be a string (exact field element)");
    }
    return FieldElem::parse(j.get<std::string>());
}

}  // namespace

Json point_to_json(const ProjPoint& p) {
    Json out = Json::array();
    for (int k = 0; k < 3; ++k) out.push_back(p[k].str());
    return out;
}

ProjPoint point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) {
        throw InvalidParameters("a point must be an array of 3 coordinate strings");
    }
    return ProjPoint(field_from_json(j[0], "coordinate"), field_from_json(j[1], "coordinate"),
                     field_from_json(j[2], "coordinate"));
}

Json relations_to_json(const RelationSet& r) {
    Json out = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json f = Json::object();
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                const FieldElem& c = r[i].at(j, k);
                if (!c.is_zero()) f[monomial_key(j, k)] = c.str();
            }
        }
        out.push_back(std::move(f));
    }
    return out;
}

RelationSet relations_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) {
        throw InvalidParameters("a relation set must be an array of 3 monomial maps");
    }
    std::array<Tensor2, 3> f;
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_object()) {
            throw InvalidParameters("each relation must be a map from monomial to coefficient");
        }
        for (const auto& [key, value] : j[i].items()) {
            bool placed = false;
            for (int a = 0; a < 3 && !placed; ++a) {
                for (int b = 0; b < 3 && !placed; ++b) {
                    if (key == monomial_key(a, b)) {
                        f[static_cast<size_t>(i)].at(a, b) = field_from_json(value, "coefficient");
                        placed = true;
                    }
                }
            }
            if (!placed) throw InvalidParameters("unknown quadratic monomial \"" + key + "\"");
        }
    }
    return RelationSet(f[0], f[1], f[2]);
}

Json cubic_to_json(const CubicForm& f) {
    Json out = Json::object();
    for (int i = 0; i < 10; ++i) {
        if (!f.coeff(i).is_zero()) out[CubicForm::monomial_name(i)] = f.coeff(i).str();
    }
    return out;
}

Json descriptor_to_json(const Descriptor& d) {
    Json out = Json::object();
    if (const TypedAlgebra* t = std::get_if<TypedAlgebra>(&d)) {
        out["type"] = tag_name(t->tag);
        Json params = Json::array();
        for (const FieldElem& p : t->params) params.push_back(p.str());
        out["params"] = std::move(params);
        return out;
    }
    const EcDescriptor& e = std::get<EcDescriptor>(d);
    out["type"] = "EC";
    out["point"] = point_to_json(e.point().point());
    out["i"] = e.exponent();
    out["regularity"] = "undecided";
    return out;
}

Descriptor descriptor_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        throw InvalidParameters("a descriptor must be an object with a \"type\" string");
    }
    std::string type = j["type"].get<std::string>();
    if (type == "EC") {
        if (!j.contains("point")) throw InvalidParameters("an EC descriptor needs a \"point\"");
        long i = 0;
        if (j.contains("i")) {
            if (j["i"].is_number_integer()) {
                i = j["i"].get<long>();
            } else if (j["i"].is_string()) {
                try {
                    i = std::stol(j["i"].get<std::string>());
                } catch (const std::exception&) {
                    throw InvalidParameters("\"i\" must be an integer");
                }
            } else {
                throw InvalidParameters("\"i\" must be an integer");
            }
        }
        return EcDescriptor(point_from_json(j["point"]), i);
    }
    TypedAlgebra t{tag_from_string(type), {}};
    if (j.contains("params")) {
        if (!j["params"].is_array()) throw InvalidParameters("\"params\" must be an array");
        for (const Json& p : j["params"]) t.params.push_back(field_from_json(p, "parameter"));
    }
    t.validate();
    return t;
}

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidParameters("malformed JSON input");
    return j;
}

Descriptor parse_descriptor(const std::string& text) {
    return descriptor_from_json(parse_json(text));
}

Json g1_report_to_json(const std::vector<G1Entry>& report) {
    Json out = Json::array();
    for (const G1Entry& e : report) {
        Json entry = Json::object();
        entry["point"] = point_to_json(e.point);
        entry["check"] = e.check;
        entry["pass"] = e.pass;
        entry["detail"] = e.detail;
        out.push_back(std::move(entry));
    }
    return out;
}

Json error_json(const Error& e) {
    return Json{{"error", {{"code", e.code()}, {"message", e.what()}}}};
}

}  // namespace asreg
