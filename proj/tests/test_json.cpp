#include "pcalc/json_io.hpp"

#include "doctest.h"

using namespace pcalc;
using nlohmann::json;

namespace {
std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }
} // namespace

TEST_CASE("loading the worked example") {
    ModulePtr F = load_module_file(fixture("ex1.json"));
    const FinitePoset& P = *F->poset;
    CHECK(P.is_grid());
    CHECK(P.shape() == std::vector<int>{3, 3});
    CHECK(F->p == 2);
    CHECK(F->dim(P.grid_index({1, 0})) == 2);
    CHECK(F->dim(P.grid_index({2, 2})) == 2);
    CHECK(F->total_dim() == 13);
    CHECK(F->map(P.grid_index({0, 0}), P.grid_index({1, 0})) == Matrix(2, 1, 2, {1, 0}));
}

TEST_CASE("serialization round-trips") {
    ModulePtr F = load_module_file(fixture("ex1.json"));
    ModulePtr G = module_from_json(json::parse(module_to_json(*F).dump()));
    CHECK(G->dims == F->dims);
    CHECK(G->cover_maps == F->cover_maps);

    ModulePtr E = load_module_file(fixture("ex4.json"));
    ModulePtr E2 = module_from_json(json::parse(module_to_json(*E).dump()));
    CHECK(E2->dims == E->dims);
}

TEST_CASE("entries are reduced modulo the prime") {
    json j = {{"field", {{"prime", 3}}},
              {"poset", {{"type", "grid"}, {"shape", {2}}}},
              {"dims", {{"0", 1}, {"1", 1}}},
              {"maps", {{"0->1", {{5}}}}}};
    ModulePtr F = module_from_json(j);
    CHECK(F->map(0, 1)(0, 0) == 2);
}

TEST_CASE("malformed files are rejected") {
    json base = {{"field", {{"prime", 2}}},
                 {"poset", {{"type", "grid"}, {"shape", {2, 2}}}},
                 {"dims", {{"0,0", 1}, {"1,1", 1}}}};

    // missing map between nonzero spaces
    json missing = base;
    missing["dims"] = {{"0,0", 1}, {"1,0", 1}};
    CHECK_THROWS_AS(module_from_json(missing), ValidationError);

    // composite pair used as a map key
    json noncover = base;
    noncover["dims"] = {{"0,0", 1}};
    noncover["maps"] = {{"0,0->1,1", {{1}}}};
    CHECK_THROWS_AS(module_from_json(noncover), ValidationError);

    // non-prime field order
    json nonprime = base;
    nonprime["field"]["prime"] = 6;
    CHECK_THROWS_AS(module_from_json(nonprime), ValidationError);

    // wrong matrix shape
    json badshape = base;
    badshape["dims"] = {{"0,0", 1}, {"1,0", 2}};
    badshape["maps"] = {{"0,0->1,0", {{1}}}};
    CHECK_THROWS_AS(module_from_json(badshape), ValidationError);
}
