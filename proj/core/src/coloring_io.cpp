#include "orw/coloring_io.hpp"

#include "json.hpp"
#include "orw/error.hpp"

namespace orw {

using nlohmann::json;

namespace {

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

NodeClassId class_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned()) {
        throw DomainError("class ids are written [i, j] with naturals, got " + j.dump());
    }
    return NodeClassId{j[0].get<Natural>(), j[1].get<Exponent>()};
}

json class_to_json(const NodeClassId& id) { return json::array({id.cnf_index, id.cb_level}); }

Color color_field(const json& j) {
    const json& v = require(j, "color");
    if (!v.is_number_integer()) throw DomainError("colour must be 0 or 1, got " + v.dump());
    return color_from_int(v.get<long long>());
}

Ordinal ordinal_from_json(const json& j) {
    if (!j.is_string()) throw DomainError("ordinals are written as expression strings, got " + j.dump());
    return parse_ordinal(j.get<std::string>());
}

std::vector<Ordinal> ordinals_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("expected an array of ordinals, got " + j.dump());
    std::vector<Ordinal> out;
    for (const json& x : j) out.push_back(ordinal_from_json(x));
    return out;
}

json ordinals_to_json(const std::vector<Ordinal>& xs) {
    json out = json::array();
    for (const Ordinal& x : xs) out.push_back(to_string(x));
    return out;
}

const json empty_array = json::array();

const json& optional_array(const json& doc, const char* key) {
    if (!doc.contains(key)) return empty_array;
    const json& v = doc.at(key);
    if (!v.is_array()) throw DomainError(std::string("field \"") + key + "\" must be an array");
    return v;
}

}  // namespace

QuotientColoring coloring_from_json(std::string_view text) {
    const json doc = parse_document(text);
    QuotientColoring::Builder builder(ordinal_from_json(require(doc, "gamma")));
    for (const json& e : optional_array(doc, "within")) builder.within(class_from_json(require(e, "class")), color_field(e));
    for (const json& e : optional_array(doc, "cross")) {
        builder.cross(class_from_json(require(e, "a")), class_from_json(require(e, "b")), color_field(e));
    }
    for (const json& e : optional_array(doc, "overrides")) {
        builder.override_pair(ordinal_from_json(require(e, "a")), ordinal_from_json(require(e, "b")), color_field(e));
    }
    return builder.build();
}

std::string coloring_to_json(const QuotientColoring& c, int indent) {
    json within = json::array();
    json cross = json::array();
    const auto& classes = c.classes();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        within.push_back({{"class", class_to_json(classes[i])}, {"color", to_int(c.cross_at(i, i))}});
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            cross.push_back({{"a", class_to_json(classes[i])},
                             {"b", class_to_json(classes[j])},
                             {"color", to_int(c.cross_at(i, j))}});
        }
    }
    json overrides = json::array();
    for (const auto& [pair, color] : c.overrides()) {
        overrides.push_back({{"a", to_string(pair.first)}, {"b", to_string(pair.second)}, {"color", to_int(color)}});
    }
    json doc = {{"gamma", to_string(c.gamma())}, {"within", within}, {"cross", cross}, {"overrides", overrides}};
    return doc.dump(indent);
}

CopyCertificate certificate_from_json(std::string_view text) {
    const json doc = parse_document(text);
    CopyCertificate cert;
    const json& kind = require(doc, "kind");
    if (kind == "blue-3") {
        cert.kind = CopyKind::blue_3;
        cert.triangle = ordinals_from_json(require(doc, "triangle"));
        return cert;
    }
    if (kind != "red-omega-plus-n") throw DomainError("unknown certificate kind " + kind.dump());
    cert.kind = CopyKind::red_omega_plus_n;
    cert.tail_class = class_from_json(require(doc, "tail_class"));
    cert.limit_point = ordinal_from_json(require(doc, "limit_point"));
    cert.excluded = ordinals_from_json(optional_array(doc, "excluded"));
    cert.top_points = ordinals_from_json(optional_array(doc, "top_points"));
    return cert;
}

std::string certificate_to_json(const CopyCertificate& cert, int indent) {
    json doc = {{"kind", to_string(cert.kind)}};
    if (cert.kind == CopyKind::blue_3) {
        doc["triangle"] = ordinals_to_json(cert.triangle);
    } else {
        doc["tail_class"] = cert.tail_class ? class_to_json(*cert.tail_class) : json(nullptr);
        doc["excluded"] = ordinals_to_json(cert.excluded);
        doc["limit_point"] = to_string(cert.limit_point);
        doc["top_points"] = ordinals_to_json(cert.top_points);
    }
    return doc.dump(indent);
}

}  // namespace orw
