#include "specseq/document.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace specseq {

namespace {

using nlohmann::json;

int parse_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw document_error("cannot parse " + what + " '" + text + "'");
    }
    if (used != text.size()) throw document_error("cannot parse " + what + " '" + text + "'");
    return value;
}

Bidegree parse_cell_key(const std::string& key) {
    std::size_t comma = key.find(',');
    if (comma == std::string::npos) throw document_error("module key '" + key + "' is not of the form p,q");
    Bidegree cell{parse_int(key.substr(0, comma), "module key"), parse_int(key.substr(comma + 1), "module key")};
    if (cell.p < 0 || cell.q < 0) throw document_error("module key '" + key + "' lies outside the first quadrant");
    return cell;
}

Int parse_coef(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Int v;
        if (mpz_set_str(v.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
            throw document_error("coefficient '" + j.get<std::string>() + "' is not an integer");
        return v;
    }
    throw document_error("coefficient must be an integer or a decimal string");
}

json coef_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

}  // namespace

Multicomplex parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw document_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw document_error("top level must be an object");
    for (const auto& [key, value] : j.items())
        if (key != "format_version" && key != "modules" && key != "maps")
            throw document_error("unknown top-level key '" + key + "'");
    if (!j.contains("format_version") || !j["format_version"].is_string() || j["format_version"] != "1")
        throw document_error("format_version must be the string \"1\"");
    if (!j.contains("modules") || !j["modules"].is_object()) throw document_error("'modules' object is required");
    if (!j.contains("maps") || !j["maps"].is_object()) throw document_error("'maps' object is required");

    Multicomplex mc;
    struct GenRef {
        Bidegree cell;
        std::size_t index;
    };
    std::map<std::string, GenRef> by_name;
    for (const auto& [key, value] : j["modules"].items()) {
        Bidegree cell = parse_cell_key(key);
        if (!value.is_array()) throw document_error("modules['" + key + "'] must be an array of names");
        std::vector<std::string> names;
        for (const auto& item : value) {
            if (!item.is_string() || item.get<std::string>().empty())
                throw document_error("generator names in modules['" + key + "'] must be nonempty strings");
            std::string name = item.get<std::string>();
            if (by_name.contains(name)) throw document_error("duplicate generator name '" + name + "'");
            by_name[name] = {cell, names.size()};
            names.push_back(std::move(name));
        }
        if (!names.empty()) mc.add_cell(cell, std::move(names));
    }

    std::map<int, std::map<Bidegree, IntMatrix>> blocks;
    for (const auto& [key, value] : j["maps"].items()) {
        int i = parse_int(key, "map index");
        if (i < 0) throw document_error("map index must be nonnegative");
        if (!value.is_array()) throw document_error("maps['" + key + "'] must be an array of entries");
        for (const auto& entry : value) {
            if (!entry.is_object() || !entry.contains("from") || !entry.contains("to") || !entry.contains("coef"))
                throw document_error("map entries need 'from', 'to' and 'coef'");
            for (const auto& [ekey, evalue] : entry.items())
                if (ekey != "from" && ekey != "to" && ekey != "coef")
                    throw document_error("unknown map entry key '" + ekey + "'");
            if (!entry["from"].is_string() || !entry["to"].is_string())
                throw document_error("'from' and 'to' must be generator names");
            std::string from = entry["from"].get<std::string>();
            std::string to = entry["to"].get<std::string>();
            auto fit = by_name.find(from);
            if (fit == by_name.end()) throw document_error("unknown generator '" + from + "'");
            auto tit = by_name.find(to);
            if (tit == by_name.end()) throw document_error("unknown generator '" + to + "'");
            Bidegree expected{fit->second.cell.p - i, fit->second.cell.q + i - 1};
            if (tit->second.cell != expected)
                throw document_error("degree shift mismatch for map " + key + ": '" + from + "' -> '" + to + "'");
            Int coef = parse_coef(entry["coef"]);
            if (coef == 0) throw document_error("zero coefficient on '" + from + "' -> '" + to + "'");
            auto bit = blocks[i]
                           .try_emplace(fit->second.cell, IntMatrix(mc.rank(expected), mc.rank(fit->second.cell)))
                           .first;
            bit->second(tit->second.index, fit->second.index) += coef;
        }
    }
    for (auto& [i, per_cell] : blocks)
        for (auto& [cell, block] : per_cell) mc.add_block(i, cell, std::move(block));
    return mc;
}

Multicomplex parse_document_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw document_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::string serialize_document(const Multicomplex& mc) {
    json modules = json::object();
    for (const auto& [cell, names] : mc.cells())
        modules[std::to_string(cell.p) + "," + std::to_string(cell.q)] = names;

    json maps = json::object();
    for (const auto& [i, per_cell] : mc.maps()) {
        json entries = json::array();
        for (const auto& [src, block] : per_cell) {
            Bidegree tgt{src.p - i, src.q + i - 1};
            const auto& src_names = mc.cells().at(src);
            const auto& tgt_names = mc.cells().at(tgt);
            for (std::size_t c = 0; c < block.cols(); ++c)
                for (std::size_t r = 0; r < block.rows(); ++r) {
                    if (block(r, c) == 0) continue;
                    json entry;
                    entry["from"] = src_names[c];
                    entry["to"] = tgt_names[r];
                    entry["coef"] = coef_to_json(block(r, c));
                    entries.push_back(std::move(entry));
                }
        }
        maps[std::to_string(i)] = std::move(entries);
    }

    json doc;
    doc["format_version"] = "1";
    doc["modules"] = std::move(modules);
    doc["maps"] = std::move(maps);
    return doc.dump(2) + "\n";
}

}  // namespace specseq
