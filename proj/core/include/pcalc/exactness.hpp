#pragma once

#include "pcalc/chain.hpp"

namespace pcalc {

struct SquareReport {
    int meet = -1, x = -1, y = -1, join = -1;
    bool is_middle_exact = false;
    int right_kernel_dim = 0;  // dim ker (g  -beta)
    int left_rank = 0;         // rank (alpha; f)
    bool is_pushout = false;
    bool is_pullback = false;
};

// Exactness of F(x^y) -> F(x)+F(y) -> F(xvy) in the middle, together with
// the two equivalent formulations (pushout comparison mono, pullback
// comparison epi); the three are asserted to agree.
SquareReport middle_exact_square(const ModulePtr& F, int x, int y);

struct PairCheck {
    bool ok = true;
    std::optional<std::pair<int, int>> witness;
};

// Conjunction over all unordered incomparable pairs; comparable pairs are
// always middle-exact (the associated complex is the graph of a map) and
// are skipped.
PairCheck is_2_middle_exact(const ModulePtr& F);

// Koszul complex of a cube: degree i carries the vertices X(S) with
// |S| = k - i, with alternating-sign differentials over the sorted
// complement of S. d*d = 0 is asserted at construction.
ChainComplex koszul(const ModulePtr& F, const CubeDiagram& cube);

// Homology dimensions per degree 0..k.
std::vector<int> koszul_homology(const ChainComplex& C);

// Koszul homology of every strongly bicartesian k-cube vanishes in degrees
// 0 < i < k. Degenerate cubes (some cover element equal to the top) are
// acyclic cones and excluded by default; include_degenerate checks them
// too.
DegreeCheck is_k_middle_exact(const ModulePtr& F, int k, CubeMode mode = CubeMode::full,
                              bool include_degenerate = false, long long cost_cap = 1000000);

} // namespace pcalc
