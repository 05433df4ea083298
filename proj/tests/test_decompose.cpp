#include "pcalc/check.hpp"
#include "pcalc/json_io.hpp"

#include "doctest.h"

#include <algorithm>

using namespace pcalc;

namespace {
std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }
} // namespace

TEST_CASE("block classification priorities") {
    PosetPtr P = FinitePoset::grid({3, 3});
    CHECK(classify_block(*P, 0, 1, 0, 1).kind == BlockKind::death);
    CHECK(classify_block(*P, 1, 2, 0, 2).kind == BlockKind::vertical);
    CHECK(classify_block(*P, 0, 2, 2, 2).kind == BlockKind::horizontal);
    CHECK(classify_block(*P, 1, 2, 1, 2).kind == BlockKind::birth);
    CHECK(classify_block(*P, 0, 2, 0, 2).kind == BlockKind::death);  // whole grid
    CHECK_THROWS_AS(classify_block(*P, 1, 1, 1, 1), NotAnInterval);  // floating rectangle
}

TEST_CASE("worked example decomposes into the three known blocks") {
    ModulePtr F = load_module_file(fixture("ex1.json"));
    DecompositionReport rep = block_decompose(F, Side::co);
    REQUIRE(rep.summands.size() == 3);
    std::vector<Block> got;
    for (const auto& s : rep.summands) got.push_back(*s.block);
    std::sort(got.begin(), got.end());
    std::vector<Block> want = {{BlockKind::death, 0, 1, 0, 1},
                               {BlockKind::vertical, 1, 2, 0, 2},
                               {BlockKind::horizontal, 0, 2, 2, 2}};
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(verify_natural_iso(rep.iso));
}

TEST_CASE("block decomposition refuses non-codegree-1 input with a witness") {
    PosetPtr P = FinitePoset::grid({2, 2});
    std::vector<int> dims(4, 1);
    dims[P->grid_index({0, 0})] = 0;
    std::map<std::pair<int, int>, Matrix> maps;
    for (const auto& [a, b] : P->hasse())
        maps.emplace(std::pair{a, b},
                     dims[a] == 0 ? Matrix(dims[b], 0, 2) : Matrix::identity(1, 2));
    ModulePtr hook = make_module(P, 2, dims, maps);
    CHECK_THROWS_AS(block_decompose(hook, Side::co), PreconditionFailed);
}

TEST_CASE("interval decomposition on a chain") {
    PosetPtr P = FinitePoset::grid({3});
    std::map<std::pair<int, int>, Matrix> maps;
    maps.emplace(std::pair{0, 1}, Matrix(2, 1, 2, {1, 0}));
    maps.emplace(std::pair{1, 2}, Matrix(1, 2, 2, {0, 1}));
    ModulePtr F = make_module(P, 2, {1, 2, 1}, maps);
    DecompositionReport rep = an_interval_decompose(F);
    REQUIRE(rep.summands.size() == 2);
    std::vector<std::vector<int>> supports;
    for (const auto& s : rep.summands) {
        REQUIRE(s.interval);
        auto iv = *s.interval;
        std::sort(iv.begin(), iv.end());
        supports.push_back(iv);
    }
    std::sort(supports.begin(), supports.end());
    CHECK(supports == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
}

TEST_CASE("splitting solver finds sections only when they exist") {
    PosetPtr chain = FinitePoset::grid({2});
    ModulePtr Fw = interval_module(chain, {0, 1}, 2);
    ModulePtr A = interval_module(chain, {1}, 2);
    ModulePtr Q = interval_module(chain, {0}, 2);
    NaturalTransformation incl = make_nt(A, Fw, {Matrix(1, 0, 2), Matrix::identity(1, 2)});
    NaturalTransformation proj = make_nt(Fw, Q, {Matrix::identity(1, 2), Matrix(0, 1, 2)});
    CHECK_THROWS_AS(natural_splitting(incl, proj, SplitDirection::section), NoSplitting);

    // the split sequence A -> A + Q -> Q does admit a section
    ModulePtr S = direct_sum({A, Q});
    NaturalTransformation incl2 =
        make_nt(A, S, {Matrix(1, 0, 2), Matrix(1, 1, 2, {1})});
    NaturalTransformation proj2 =
        make_nt(S, Q, {Matrix::identity(1, 2), Matrix(0, 1, 2)});
    NaturalTransformation s = natural_splitting(incl2, proj2, SplitDirection::section);
    for (int x = 0; x < 2; ++x)
        CHECK(proj2.at(x) * s.at(x) == Matrix::identity(Q->dim(x), 2));
}

TEST_CASE("middle-exact split of the worked example") {
    ModulePtr F = load_module_file(fixture("ex1.json"));
    DecompositionReport rep = middle_exact_split(F);
    REQUIRE(rep.summands.size() == 2);
    CHECK(rep.summands[0].module->total_dim() + rep.summands[1].module->total_dim() ==
          F->total_dim());
    CHECK(is_degree(rep.summands[0].module, 1).ok);
    CHECK(is_codegree(rep.summands[1].module, 1).ok);
}

TEST_CASE("middle-exact split rejects the hook with a witness pair") {
    PosetPtr P = FinitePoset::grid({2, 2});
    std::vector<int> dims(4, 1);
    dims[P->grid_index({0, 0})] = 0;
    std::map<std::pair<int, int>, Matrix> maps;
    for (const auto& [a, b] : P->hasse())
        maps.emplace(std::pair{a, b},
                     dims[a] == 0 ? Matrix(dims[b], 0, 2) : Matrix::identity(1, 2));
    CHECK_THROWS_AS(middle_exact_split(make_module(P, 2, dims, maps)), PreconditionFailed);
}

TEST_CASE("three-part decomposition needs a grid") {
    ModulePtr F = load_module_file(fixture("ex4.json"));
    CHECK_THROWS_AS(bkc_decompose(F), PosetUnsupported);
}

TEST_CASE("three-part decomposition separates the constructed parts") {
    PosetPtr P = FinitePoset::grid({4, 4});
    int gen = P->grid_index({2, 1});   // interior: all of it lands in the projective part
    int cogen = P->grid_index({1, 2});  // interior: all of it lands in the injective part
    ModulePtr F = conjugate_module(
        direct_sum({free_module(P, {gen}, 2, true), free_module(P, {cogen}, 2, false)}), 3);
    DecompositionReport rep = bkc_decompose(F, 3);
    REQUIRE(rep.summands.size() == 3);
    CHECK(rep.summands[0].label == "B");
    FreeStructure fk = cofree_structure(rep.summands[1].module);
    FreeStructure fc = free_structure(rep.summands[2].module);
    REQUIRE(fk.ok);
    REQUIRE(fc.ok);
    CHECK(fk.multiplicity == std::map<int, int>{{cogen, 1}});
    CHECK(fc.multiplicity == std::map<int, int>{{gen, 1}});
}

TEST_CASE("N-lattice bidegree-1 module is not interval decomposable here") {
    PosetPtr P = FinitePoset::explicit_poset(
        {"a", "b", "c", "d", "t"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"d", "t"}});
    std::vector<int> dims = {0, 1, 1, 2, 1};
    std::map<std::pair<int, int>, Matrix> maps;
    maps.emplace(std::pair{P->index_of("a"), P->index_of("b")}, Matrix(1, 0, 2));
    maps.emplace(std::pair{P->index_of("a"), P->index_of("c")}, Matrix(1, 0, 2));
    maps.emplace(std::pair{P->index_of("b"), P->index_of("d")}, Matrix(2, 1, 2, {1, 0}));
    maps.emplace(std::pair{P->index_of("c"), P->index_of("d")}, Matrix(2, 1, 2, {0, 1}));
    maps.emplace(std::pair{P->index_of("d"), P->index_of("t")}, Matrix(1, 2, 2, {1, 1}));
    ModulePtr F = make_module(P, 2, dims, maps);
    CHECK(is_bidegree(F, 1).ok);
    CHECK_THROWS_AS(bidegree1_interval_decompose(F), PosetUnsupported);
}

TEST_CASE("bidegree-1 interval decomposition on a grid") {
    PosetPtr P = FinitePoset::grid({4, 4});
    // cofree corner piece plus a strict interior vertical slab
    std::vector<int> slab;
    for (int x = 0; x < P->size(); ++x) {
        int c = P->coords(x)[0];
        if (c >= 1 && c <= 2) slab.push_back(x);
    }
    ModulePtr F = conjugate_module(
        direct_sum({free_module(P, {P->grid_index({3, 3})}, 2, false),
                    interval_module(P, slab, 2)}),
        5);
    CHECK(is_bidegree(F, 1).ok);
    DecompositionReport rep = bidegree1_interval_decompose(F, 5);
    CHECK(rep.summands.size() == 2);
    CHECK(verify_natural_iso(rep.iso));
}

TEST_CASE("free and cofree structure detect non-members") {
    PosetPtr P = FinitePoset::grid({3, 3});
    ModulePtr F = free_module(P, {P->grid_index({1, 1}), P->grid_index({0, 2})}, 5, true);
    FreeStructure fs = free_structure(conjugate_module(F, 11), 1);
    REQUIRE(fs.ok);
    CHECK(fs.multiplicity ==
          std::map<int, int>{{P->grid_index({1, 1}), 1}, {P->grid_index({0, 2}), 1}});
    // an interval that is not an up-set is not free
    CHECK(!free_structure(free_module(P, {P->grid_index({1, 1})}, 5, false)).ok);
}
