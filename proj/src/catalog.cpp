#include "quatks/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

#include <json.hpp>

namespace quatks {

namespace {

Rat field_rational(const nlohmann::json& j, const std::string& entry,
                   const std::string& field) {
    try {
        if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
        return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw std::runtime_error("catalog entry '" + entry + "', field '" + field +
                                 "': " + e.what());
    }
}

}  // namespace

Order CatalogEntry::make_order() const {
    QuatAlgebra alg = make_algebra();
    std::array<QuatElement, 4> elems = {
        QuatElement(alg, basis[0]), QuatElement(alg, basis[1]),
        QuatElement(alg, basis[2]), QuatElement(alg, basis[3])};
    return Order(alg, elems);
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw std::runtime_error("catalog " + path + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("orders") || !doc["orders"].is_array())
        throw std::runtime_error("catalog " + path + " must be {\"orders\": [...]}");

    std::vector<CatalogEntry> out;
    std::set<std::string> seen;
    for (const auto& je : doc["orders"]) {
        CatalogEntry e;
        if (!je.contains("id") || !je["id"].is_string() || je["id"].get<std::string>().empty())
            throw std::runtime_error("catalog entry without a nonempty id");
        e.id = je["id"].get<std::string>();
        if (!seen.insert(e.id).second)
            throw std::runtime_error("duplicate catalog id: " + e.id);

        try {
            e.a = field_rational(je.at("a"), e.id, "a");
            e.b = field_rational(je.at("b"), e.id, "b");

            const auto& jb = je.at("basis");
            if (!jb.is_array() || jb.size() != 16)
                throw std::runtime_error("catalog entry '" + e.id +
                                         "': basis must have 16 rationals");
            for (int t = 0; t < 16; ++t)
                e.basis[t / 4][t % 4] = field_rational(jb[t], e.id, "basis");

            const auto& jd = je.at("expected_d_B");
            if (!jd.is_number_integer() || jd.get<long long>() <= 0)
                throw std::runtime_error("catalog entry '" + e.id +
                                         "': expected_d_B must be a positive integer");
            e.expected_d_B = Int(static_cast<long>(jd.get<long long>()));

            if (je.contains("mu")) {
                const auto& jm = je["mu"];
                if (!jm.is_array() || jm.size() != 4)
                    throw std::runtime_error("catalog entry '" + e.id +
                                             "': mu hint must have 4 rationals");
                Vec4 m;
                for (int t = 0; t < 4; ++t) m[t] = field_rational(jm[t], e.id, "mu");
                e.mu = m;
            }
            e.make_order();  // rejects dependent bases early
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception& ex) {
            throw std::runtime_error("catalog entry '" + e.id + "': " + ex.what());
        }
        out.push_back(std::move(e));
    }
    if (out.empty()) throw std::runtime_error("catalog " + path + " has no orders");
    return out;
}

std::string resolve_catalog_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("QUATKS_CATALOG"); env && *env) return env;
    return "data/catalog.json";
}

}  // namespace quatks
