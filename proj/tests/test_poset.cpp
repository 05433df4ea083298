#include "pcalc/poset.hpp"

#include "doctest.h"

#include <algorithm>

using namespace pcalc;

TEST_CASE("3x3 grid lattice profile") {
    PosetPtr P = FinitePoset::grid({3, 3});
    CHECK(P->size() == 9);
    CHECK(P->hasse().size() == 12);
    CHECK(*P->bottom() == P->grid_index({0, 0}));
    CHECK(*P->top() == P->grid_index({2, 2}));
    CHECK(P->join(P->grid_index({1, 0}), P->grid_index({0, 2})) == P->grid_index({1, 2}));
    CHECK(P->meet(P->grid_index({1, 2}), P->grid_index({2, 1})) == P->grid_index({1, 1}));

    LatticeProfile prof = analyze_lattice(*P);
    CHECK(prof.is_lattice);
    CHECK(prof.is_distributive);
    for (int x = 0; x < P->size(); ++x) {
        int nz = 0;
        for (int c : P->coords(x))
            if (c > 0) ++nz;
        // join-dimension equals the number of positive coordinates
        CHECK(prof.jdim[x] == nz);
        // and equals the parent count in a distributive lattice
        CHECK(prof.jdim[x] == static_cast<int>(P->parents(x).size()));
    }
}

TEST_CASE("diamond M3 is a non-distributive lattice") {
    PosetPtr P = FinitePoset::explicit_poset(
        {"0", "a", "b", "c", "1"},
        {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
    LatticeProfile prof = analyze_lattice(*P);
    CHECK(prof.is_lattice);
    CHECK(!prof.is_distributive);
    CHECK(prof.distributivity_witness.has_value());
}

TEST_CASE("N-lattice strata") {
    PosetPtr P = FinitePoset::explicit_poset(
        {"a", "b", "c", "d", "t"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"d", "t"}});
    LatticeProfile prof = analyze_lattice(*P);
    CHECK(prof.is_lattice);
    CHECK(prof.is_distributive);

    Stratum s = stratum(*P, 1, StratumSide::join);
    std::vector<std::string> names;
    for (int e : s.elements) names.push_back(P->name(e));
    std::sort(names.begin(), names.end());
    // t has join-dimension 1 but its predecessor d has join-dimension 2,
    // so the stratum is not down-closed
    CHECK(names == std::vector<std::string>{"a", "b", "c", "t"});
    CHECK(!s.closed);
}

TEST_CASE("cube enumeration counts") {
    CHECK(enumerate_cubes(*FinitePoset::grid({2, 2}), 2, CubeMode::full).size() == 1);
    PosetPtr g33 = FinitePoset::grid({3, 3});
    // top (i,j) with i,j >= 1 admits i*j unordered pairwise covers
    CHECK(enumerate_cubes(*g33, 2, CubeMode::full).size() == 9);
    CHECK(enumerate_cubes(*g33, 2, CubeMode::parents_only).size() == 4);
    CHECK(enumerate_cubes(*g33, 3, CubeMode::full).empty());
}

TEST_CASE("cube assignment is the meet of omitted cover elements") {
    PosetPtr P = FinitePoset::grid({2, 2, 2});
    int v = P->grid_index({1, 1, 1});
    std::vector<int> xs = {P->grid_index({0, 1, 1}), P->grid_index({1, 0, 1}),
                           P->grid_index({1, 1, 0})};
    CubeDiagram c = cube_from_cover(*P, v, xs);
    CHECK(c.k == 3);
    CHECK(c.assignment[7] == v);
    CHECK(c.assignment[0] == P->grid_index({0, 0, 0}));
    CHECK(c.assignment[1] == P->grid_index({1, 0, 0}));  // meet of x^1, x^2
    CHECK(c.assignment[6] == P->grid_index({0, 1, 1}));  // only x^0 kept
}

TEST_CASE("cost cap aborts full enumeration") {
    PosetPtr P = FinitePoset::grid({4, 4, 3});
    CHECK_THROWS_AS(enumerate_cubes(*P, 2, CubeMode::full, 10), CostCapExceeded);
}
