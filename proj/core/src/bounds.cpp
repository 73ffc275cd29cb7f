#include "orw/bounds.hpp"

#include "json.hpp"
#include "orw/error.hpp"
#include "orw/ramsey.hpp"

namespace orw {

std::string to_string(ValueProvenance p) { return p == ValueProvenance::computed ? "computed" : "external"; }

std::string to_string(Tristate t) {
    switch (t) {
        case Tristate::no: return "no";
        case Tristate::yes: return "yes";
        case Tristate::unknown: return "unknown";
    }
    return "?";
}

RamseyTable RamseyTable::defaults() {
    RamseyTable t;
    const std::vector<std::array<Natural, 3>> rows{
        {2, 3, 3},   {3, 6, 6},   {4, 9, 9},   {5, 14, 14}, {6, 18, 18},  {7, 23, 23},  {8, 28, 28},
        {9, 36, 36}, {10, 40, 41}, {11, 47, 50}, {12, 53, 59}, {13, 60, 68}, {14, 67, 77}, {15, 74, 87},
    };
    for (const auto& r : rows) t.set({r[0], r[1], r[2], ValueProvenance::external});
    return t;
}

void RamseyTable::set(const RamseyEntry& e) {
    if (e.n < 2) throw DomainError("Ramsey table entries need n >= 2");
    if (e.lower == 0 || e.lower > e.upper)
        throw DomainError("R(" + std::to_string(e.n) + ",3) bracket [" + std::to_string(e.lower) + "," +
                          std::to_string(e.upper) + "] is empty");
    entries_[e.n] = e;
}

void RamseyTable::merge(const RamseyTable& other) {
    for (const auto& [n, e] : other.entries_) entries_[n] = e;
}

std::optional<RamseyEntry> RamseyTable::find(Natural n) const {
    auto it = entries_.find(n);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void RamseyTable::compute_small(Natural up_to) {
    if (up_to > 4) throw DomainError("exhaustive Ramsey search is limited to n <= 4");
    for (Natural n = 2; n <= up_to; ++n) {
        const RamseyRecord rec = brute_force_ramsey(n);
        set({n, rec.value, rec.value, ValueProvenance::computed});
    }
}

RamseyTable RamseyTable::from_json(const std::string& text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("Ramsey table: ") + e.what(), e.byte);
    }
    RamseyTable t;
    try {
        if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
            throw DomainError("Ramsey table needs a \"values\" array");
        if (j.contains("version") && j["version"].get<int>() != 1)
            throw DomainError("unsupported Ramsey table version");
        for (const json& v : j["values"]) {
            RamseyEntry e;
            e.n = v.at("n").get<Natural>();
            if (v.contains("value")) {
                if (v.contains("lower") || v.contains("upper"))
                    throw DomainError("entry for n=" + std::to_string(e.n) + " mixes value and bounds");
                e.lower = e.upper = v["value"].get<Natural>();
            } else {
                e.lower = v.at("lower").get<Natural>();
                e.upper = v.at("upper").get<Natural>();
            }
            const std::string prov = v.value("provenance", std::string("external"));
            if (prov == "computed")
                e.provenance = ValueProvenance::computed;
            else if (prov == "external")
                e.provenance = ValueProvenance::external;
            else
                throw DomainError("unknown provenance \"" + prov + "\"");
            t.set(e);
        }
    } catch (const json::exception& e) {
        throw DomainError(std::string("Ramsey table: ") + e.what());
    }
    return t;
}

std::string RamseyTable::to_json(int indent) const {
    using nlohmann::json;
    json values = json::array();
    for (const auto& [n, e] : entries_) {
        json v{{"n", n}};
        if (e.exact()) {
            v["value"] = e.lower;
        } else {
            v["lower"] = e.lower;
            v["upper"] = e.upper;
        }
        v["provenance"] = to_string(e.provenance);
        values.push_back(v);
    }
    return json{{"version", 1}, {"values", values}}.dump(indent);
}

namespace {

RamseyEntry need(const RamseyTable& t, Natural m) {
    auto e = t.find(m);
    if (!e) throw DomainError("missing Ramsey data: R(" + std::to_string(m) + ",3) is needed");
    return *e;
}

Ordinal w2_w_c(Natural a, Natural b, Natural c) {
    return Ordinal::omega_power(2, a) + Ordinal::omega_power(1, b) + Ordinal::natural(c);
}

}  // namespace

BoundsRow bounds_row(Natural n, const RamseyTable& table) {
    if (n < 3) throw DomainError("bounds are stated for n >= 3");
    BoundsRow row;
    row.n = n;
    const RamseyEntry rn = need(table, n);
    const RamseyEntry rr = need(table, 2 * n - 3);
    const RamseyEntry rp = need(table, n - 1);
    row.ramsey_values_used[n] = rn;
    row.ramsey_values_used[2 * n - 3] = rr;
    row.ramsey_values_used[n - 1] = rp;

    row.lower = w2_w_c(n, rn.lower - n, n);
    row.upper_ramsey = w2_w_c(n, rr.upper + 1, 1);
    row.upper_square = w2_w_c(n, n * n - 4, 1);
    row.upper_prior = w2_w_c(rp.upper + 1, n - 1, n);

    // square < ramsey  <=>  n^2 - 4 < R(2n-3,3) + 1.
    const Natural square_k = n * n - 4;
    if (square_k < rr.lower + 1)
        row.square_better = Tristate::yes;
    else if (square_k >= rr.upper + 1)
        row.square_better = Tristate::no;
    else
        row.square_better = Tristate::unknown;
    return row;
}

std::vector<BoundsRow> bounds_table(Natural nmax, const RamseyTable& table) {
    if (nmax < 3) throw DomainError("--nmax must be at least 3");
    std::vector<BoundsRow> rows;
    for (Natural n = 3; n <= nmax; ++n) rows.push_back(bounds_row(n, table));
    return rows;
}

std::string bounds_to_json(const std::vector<BoundsRow>& rows, int indent) {
    using nlohmann::json;
    json arr = json::array();
    for (const BoundsRow& r : rows) {
        json used = json::object();
        for (const auto& [m, e] : r.ramsey_values_used) {
            json v{{"lower", e.lower}, {"upper", e.upper}, {"provenance", to_string(e.provenance)}};
            used["R(" + std::to_string(m) + ",3)"] = v;
        }
        json sb = r.square_better == Tristate::unknown ? json(nullptr) : json(r.square_better == Tristate::yes);
        arr.push_back({{"n", r.n},
                       {"lower", to_string(r.lower)},
                       {"upper_ramsey", to_string(r.upper_ramsey)},
                       {"upper_square", to_string(r.upper_square)},
                       {"upper_prior", to_string(r.upper_prior)},
                       {"square_better", sb},
                       {"ramsey_values_used", used}});
    }
    return json{{"rows", arr}}.dump(indent);
}

}  // namespace orw
