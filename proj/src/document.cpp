#include "magnetite/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "magnetite/errors.hpp"

namespace magnetite::cli {

namespace {

using nlohmann::json;

Int json_int(const json& v, const std::string& where) {
    if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
    if (v.is_number_integer()) return Int(v.get<std::int64_t>());
    throw ParseError(where + ": expected an integer (64-bit range)");
}

std::int64_t to_int64(const Int& v, const std::string& where) {
    if (v < Int(std::numeric_limits<std::int64_t>::min()) ||
        v > Int(std::numeric_limits<std::int64_t>::max())) {
        throw ValidationError(where + ": coordinate " + v.str() +
                              " does not fit the document integer range");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

MonoidDocument parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("document root must be an object");
    for (const auto& [key, value] : root.items()) {
        if (key != "ambient" && key != "generators" && key != "name") {
            throw ParseError("unknown key \"" + key + "\"");
        }
    }
    if (!root.contains("ambient") || !root["ambient"].is_object()) {
        throw ParseError("\"ambient\" must be an object with rank and torsion");
    }
    const json& ambient = root["ambient"];
    for (const auto& [key, value] : ambient.items()) {
        if (key != "rank" && key != "torsion") {
            throw ParseError("unknown key \"ambient." + key + "\"");
        }
    }
    if (!ambient.contains("rank")) throw ParseError("\"ambient.rank\" is required");
    Int rank = json_int(ambient["rank"], "ambient.rank");
    if (rank < 0) throw ParseError("ambient.rank: must be nonnegative");
    if (rank > 64) throw ParseError("ambient.rank: unreasonably large");

    IntVec torsion;
    if (ambient.contains("torsion")) {
        if (!ambient["torsion"].is_array()) {
            throw ParseError("\"ambient.torsion\" must be an array");
        }
        std::size_t i = 0;
        for (const json& d : ambient["torsion"]) {
            Int order = json_int(d, "ambient.torsion[" + std::to_string(i) + "]");
            if (order < 2) {
                throw ParseError("ambient.torsion[" + std::to_string(i) +
                                 "]: order must be >= 2, got " + order.str());
            }
            torsion.push_back(order);
            ++i;
        }
    }

    MonoidDocument doc;
    doc.group = AmbientGroup(static_cast<std::size_t>(rank), std::move(torsion));

    if (!root.contains("generators") || !root["generators"].is_array()) {
        throw ParseError("\"generators\" must be an array of coordinate vectors");
    }
    std::size_t gi = 0;
    for (const json& vec : root["generators"]) {
        std::string where = "generators[" + std::to_string(gi) + "]";
        if (!vec.is_array()) throw ParseError(where + ": expected an array");
        if (vec.size() != doc.group.coords()) {
            throw ParseError(where + ": expected " +
                             std::to_string(doc.group.coords()) +
                             " coordinates, got " + std::to_string(vec.size()));
        }
        IntVec coords;
        std::size_t ci = 0;
        for (const json& c : vec) {
            coords.push_back(json_int(c, where + "[" + std::to_string(ci) + "]"));
            ++ci;
        }
        doc.generators.push_back(GroupElement::from_flat(doc.group, coords));
        ++gi;
    }

    if (root.contains("name")) {
        if (!root["name"].is_string()) throw ParseError("\"name\" must be a string");
        doc.name = root["name"].get<std::string>();
    }
    return doc;
}

MonoidDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_document(buf.str());
    } catch (ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

MonoidDocument document_from(const FgMonoid& m, std::optional<std::string> name) {
    return MonoidDocument{m.group(), m.gens(), std::move(name)};
}

std::string serialize_document(const MonoidDocument& doc) {
    json root;
    root["ambient"]["rank"] = doc.group.rank;
    root["ambient"]["torsion"] = json::array();
    for (const Int& d : doc.group.torsion) {
        root["ambient"]["torsion"].push_back(to_int64(d, "torsion"));
    }
    root["generators"] = json::array();
    for (const GroupElement& g : doc.generators) {
        json vec = json::array();
        for (const Int& c : g.flat()) vec.push_back(to_int64(c, "generator"));
        root["generators"].push_back(vec);
    }
    if (doc.name) root["name"] = *doc.name;
    return root.dump(2) + "\n";
}

}  // namespace magnetite::cli
