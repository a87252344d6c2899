#include "indkernel/instance.hpp"

namespace indkernel {

using json = nlohmann::ordered_json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw InvalidArgument(where + ": missing field '" + key + "'");
    }
    return obj.at(key);
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_string()) throw InvalidArgument(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

} // namespace

const Carrier& Instance::carrier(const std::string& name) const {
    auto it = carriers.find(name);
    if (it == carriers.end()) throw InvalidArgument("unknown carrier '" + name + "'");
    return it->second;
}

const FinMap& Instance::map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw InvalidArgument("unknown map '" + name + "'");
    return it->second;
}

Instance load_instance(const json& doc) {
    Instance inst;
    inst.document = doc;
    if (!doc.is_object()) throw InvalidArgument("instance must be a JSON object");

    if (doc.contains("carriers")) {
        const auto& carriers = doc.at("carriers");
        if (!carriers.is_object()) throw InvalidArgument("'carriers' must be an object");
        for (const auto& [name, elems] : carriers.items()) {
            if (!elems.is_array()) throw InvalidArgument("carrier '" + name + "' must be a list of names");
            std::vector<std::string> names;
            for (const auto& e : elems) {
                if (!e.is_string()) throw InvalidArgument("carrier '" + name + "' has a non-string element");
                names.push_back(e.get<std::string>());
            }
            inst.carriers.emplace(name, Carrier(std::move(names)));
        }
    }

    if (doc.contains("maps")) {
        const auto& maps = doc.at("maps");
        if (!maps.is_object()) throw InvalidArgument("'maps' must be an object");
        for (const auto& [name, entry] : maps.items()) {
            auto where = "map '" + name + "'";
            const auto& dom = inst.carrier(string_field(entry, "from", where));
            const auto& cod = inst.carrier(string_field(entry, "to", where));
            const auto& table = field(entry, "table", where);
            if (!table.is_object()) throw InvalidArgument(where + ": 'table' must be an object");
            std::vector<std::pair<std::string, std::string>> pairs;
            for (const auto& [x, y] : table.items()) {
                if (!y.is_string()) throw InvalidArgument(where + ": image of '" + x + "' must be a string");
                pairs.emplace_back(x, y.get<std::string>());
            }
            inst.maps.emplace(name, FinMap::from_pairs(dom, cod, pairs));
        }
    }
    return inst;
}

Square square_from_instance(const Instance& inst) {
    const auto& entry = field(inst.document, "square", "instance");
    auto get = [&](const char* role) { return inst.map(string_field(entry, role, "square")); };
    return Square(get("f"), get("p"), get("g"), get("q"));
}

SurjectionFamily surjection_family_from_instance(const Instance& inst) {
    const auto& entry = field(inst.document, "family", "instance");
    const auto& base = inst.carrier(string_field(entry, "base", "family"));
    const auto& members = field(entry, "members", "family");
    if (!members.is_array()) throw InvalidArgument("family: 'members' must be a list of map names");
    std::vector<FinMap> maps;
    for (const auto& m : members) {
        if (!m.is_string()) throw InvalidArgument("family: member names must be strings");
        maps.push_back(inst.map(m.get<std::string>()));
    }
    return SurjectionFamily(base, std::move(maps));
}

std::vector<Carrier> collection_family_from_instance(const Instance& inst) {
    const auto& entry = field(inst.document, "collection_family", "instance");
    if (!entry.is_array()) throw InvalidArgument("'collection_family' must be a list of carrier names");
    std::vector<Carrier> out;
    for (const auto& c : entry) {
        if (!c.is_string()) throw InvalidArgument("collection_family: carrier names must be strings");
        out.push_back(inst.carrier(c.get<std::string>()));
    }
    return out;
}

json map_to_json(const FinMap& m) {
    json table = json::object();
    for (std::size_t x = 0; x < m.dom().size(); ++x) table[m.dom().name(x)] = m.cod().name(m(x));
    return {{"domain", m.dom().names()}, {"codomain", m.cod().names()}, {"table", table}};
}

json square_to_json(const Square& sq) {
    json carriers = {{"A", sq.a().names()}, {"B", sq.b().names()}, {"C", sq.c().names()}, {"D", sq.d().names()}};
    auto map_entry = [](const FinMap& m, const char* from, const char* to) {
        json table = json::object();
        for (std::size_t x = 0; x < m.dom().size(); ++x) table[m.dom().name(x)] = m.cod().name(m(x));
        return json{{"from", from}, {"to", to}, {"table", table}};
    };
    json maps = {{"f", map_entry(sq.f(), "B", "A")},
                 {"p", map_entry(sq.p(), "C", "A")},
                 {"g", map_entry(sq.g(), "D", "C")},
                 {"q", map_entry(sq.q(), "D", "B")}};
    return {{"carriers", carriers}, {"maps", maps}, {"square", {{"f", "f"}, {"p", "p"}, {"g", "g"}, {"q", "q"}}}};
}

json covering_to_json(const Square& sq, const CoveringReport& report) {
    json out = {{"holds", report.holds}};
    if (report.uncovered_point) {
        out["counterexample"] = {{"kind", "p-not-surjective"}, {"point", sq.a().name(*report.uncovered_point)}};
    } else if (report.unmatched_pair) {
        out["counterexample"] = {{"kind", "unmatched-pair"},
                                 {"b", sq.b().name(report.unmatched_pair->first)},
                                 {"c", sq.c().name(report.unmatched_pair->second)}};
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

json collection_to_json(const Square& sq, const CollectionReport& report) {
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back({{"point", sq.a().name(w.point)},
                             {"cover", map_to_json(w.cover)},
                             {"c", sq.c().name(w.c)},
                             {"lift", map_to_json(w.lift)}});
    }
    json out = {{"holds", report.holds}, {"bound", report.bound}, {"witnesses", witnesses}};
    if (report.failure) {
        out["failure"] = {{"point", sq.a().name(report.failure->point)}, {"cover", map_to_json(report.failure->cover)}};
    } else {
        out["failure"] = nullptr;
    }
    return out;
}

json amc_family_to_json(const AmcFamilyReport& report) {
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back({{"cover", map_to_json(w.cover)}, {"index", w.index}, {"lift", map_to_json(w.lift)}});
    }
    json out = {{"holds", report.holds}, {"bound", report.bound}, {"witnesses", witnesses}};
    out["failure"] = report.failure ? json{{"cover", map_to_json(*report.failure)}} : json(nullptr);
    return out;
}

json collection_family_to_json(const CollectionFamilyReport& report) {
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back({{"index", w.index},
                             {"cover", map_to_json(w.cover)},
                             {"refining_index", w.refining_index},
                             {"refining_map", map_to_json(w.refining_map)},
                             {"lift", map_to_json(w.lift)}});
    }
    json out = {{"holds", report.holds}, {"bound", report.bound}, {"witnesses", witnesses}};
    out["failure"] = report.failure
                         ? json{{"index", report.failure->index}, {"cover", map_to_json(report.failure->cover)}}
                         : json(nullptr);
    return out;
}

} // namespace indkernel
