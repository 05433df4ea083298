#include "pcalc/json_io.hpp"

#include <fstream>

namespace pcalc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Matrix matrix_from_json(const json& j, int rows, int cols, uint32_t p, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ValidationError("matrix for " + where + " must have " + std::to_string(rows) +
                              " rows");
    std::vector<long long> entries;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ValidationError("matrix for " + where + " must have " + std::to_string(cols) +
                                  " columns per row");
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw ValidationError("non-integer matrix entry in " + where);
            entries.push_back(e.get<long long>());
        }
    }
    return Matrix(rows, cols, p, std::move(entries));
}

} // namespace

ModulePtr module_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("module file must be a JSON object");
    if (!j.contains("field") || !j["field"].contains("prime"))
        throw ValidationError("missing field.prime");
    uint32_t p = j["field"]["prime"].get<uint32_t>();
    try {
        gf::require_prime(p);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }

    if (!j.contains("poset") || !j["poset"].contains("type"))
        throw ValidationError("missing poset.type");
    const json& jp = j["poset"];
    PosetPtr P;
    if (jp["type"] == "grid") {
        std::vector<int> shape = jp.at("shape").get<std::vector<int>>();
        P = FinitePoset::grid(shape);
    } else if (jp["type"] == "explicit") {
        auto elements = jp.at("elements").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> covers;
        for (const auto& c : jp.at("hasse")) {
            if (!c.is_array() || c.size() != 2)
                throw ValidationError("hasse entries must be [lo, hi] pairs");
            covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
        P = FinitePoset::explicit_poset(std::move(elements), covers);
    } else {
        throw ValidationError("poset.type must be \"grid\" or \"explicit\"");
    }

    std::vector<int> dims(P->size(), 0);
    if (!j.contains("dims") || !j["dims"].is_object()) throw ValidationError("missing dims");
    for (const auto& [key, val] : j["dims"].items()) dims[P->index_of(key)] = val.get<int>();

    std::map<std::pair<int, int>, Matrix> maps;
    if (j.contains("maps")) {
        for (const auto& [key, val] : j["maps"].items()) {
            auto arrow = key.find("->");
            if (arrow == std::string::npos)
                throw ValidationError("map key \"" + key + "\" is not of the form lo->hi");
            int a = P->index_of(key.substr(0, arrow));
            int b = P->index_of(key.substr(arrow + 2));
            if (!P->covers(a, b))
                throw ValidationError("map key \"" + key + "\" is not a cover pair");
            maps.emplace(std::pair{a, b}, matrix_from_json(val, dims[b], dims[a], p, key));
        }
    }
    // omitted maps with a zero end are zero
    for (const auto& [a, b] : P->hasse())
        if (!maps.count({a, b})) {
            if (dims[a] != 0 && dims[b] != 0)
                throw ValidationError("missing map " + P->name(a) + "->" + P->name(b));
            maps.emplace(std::pair{a, b}, Matrix(dims[b], dims[a], p));
        }
    return make_module(P, p, std::move(dims), std::move(maps));
}

ModulePtr load_module_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("invalid JSON in " + path + ": " + e.what());
    }
    return module_from_json(j);
}

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json module_to_json(const PersistenceModule& F) {
    const FinitePoset& P = *F.poset;
    ordered_json j;
    j["field"]["prime"] = F.p;
    if (P.is_grid()) {
        j["poset"]["type"] = "grid";
        j["poset"]["shape"] = P.shape();
    } else {
        j["poset"]["type"] = "explicit";
        ordered_json elems = ordered_json::array();
        for (int x = 0; x < P.size(); ++x) elems.push_back(P.name(x));
        j["poset"]["elements"] = std::move(elems);
        ordered_json hasse = ordered_json::array();
        for (const auto& [a, b] : P.hasse()) hasse.push_back({P.name(a), P.name(b)});
        j["poset"]["hasse"] = std::move(hasse);
    }
    ordered_json dims = ordered_json::object();
    for (int x = 0; x < P.size(); ++x) dims[P.name(x)] = F.dim(x);
    j["dims"] = std::move(dims);
    ordered_json maps = ordered_json::object();
    for (const auto& [a, b] : P.hasse()) {
        const Matrix& m = F.cover_maps.at({a, b});
        if (m.rows() == 0 || m.cols() == 0) continue;
        maps[P.name(a) + "->" + P.name(b)] = matrix_to_json(m);
    }
    j["maps"] = std::move(maps);
    return j;
}

void save_module_file(const PersistenceModule& F, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open " + path + " for writing");
    out << module_to_json(F).dump(2) << "\n";
}

} // namespace pcalc
