#pragma once

#include "pcalc/pmodule.hpp"

namespace pcalc {

enum class Side { co, contra };

struct ApproximationResult {
    ModulePtr approx;
    // counit T_nF -> F on the co side, unit F -> T^nF on the contra side
    NaturalTransformation comparison;
    int n = 0;
    Side side = Side::co;
};

// T_nF: left Kan extension of F restricted to the join-dimension <= n
// stratum; (T_nF)(x) is the colimit over {v : jdim(v) <= n, v <= x}. On
// grids a fast path over the coordinate-zeroing subdiagram cross-checks the
// generic computation. Throws PosetUnsupported off distributive lattices.
ApproximationResult codegree_approx(const ModulePtr& F, int n);

// Dual: (T^nF)(x) is the limit over {v : mdim(v) <= n, v >= x}.
ApproximationResult degree_approx(const ModulePtr& F, int n);

// Colimit presentation behind codegree_approx: the stratum elements feeding
// each value and the cocone legs out of them. Lets callers factor maps
// through the Kan extension canonically.
struct KanPresentation {
    ModulePtr approx;
    NaturalTransformation counit;
    std::vector<std::vector<int>> nodes;
    std::vector<std::vector<Matrix>> legs;
};

KanPresentation codegree_presentation(const ModulePtr& F, int n);

struct DegreeCheck {
    bool ok = true;
    std::optional<CubeDiagram> witness;
};

// A functor is codegree n when it sends every strongly bicartesian
// (n+1)-cube to a cocartesian cube (colimit of the punctured cube maps
// isomorphically to the top value). full mode is sound and complete;
// parents_only is a cheaper necessary condition.
DegreeCheck is_codegree(const ModulePtr& F, int n, CubeMode mode = CubeMode::full,
                        long long cost_cap = 1000000);
DegreeCheck is_degree(const ModulePtr& F, int n, CubeMode mode = CubeMode::full,
                      long long cost_cap = 1000000);
DegreeCheck is_bidegree(const ModulePtr& F, int n, CubeMode mode = CubeMode::full,
                        long long cost_cap = 1000000);

// D_nF = coker(T_{n-1}F -> T_nF); D^nF = ker(T^nF -> T^{n-1}F). n >= 1.
SubobjectResult colayer(const ModulePtr& F, int n);
SubobjectResult layer(const ModulePtr& F, int n);

struct LatchingData {
    int element = -1;
    int object_dim = 0;
    // latching: L_xF -> F(x); matching: F(x) -> M_xF
    Matrix map;
};

// Colimit of F strictly below x (dual: limit strictly above). For
// join-dimension 1 the result is checked against F(parent); for higher
// join-dimension against the punctured parent-cube colimit.
LatchingData latching(const ModulePtr& F, int x);
LatchingData matching(const ModulePtr& F, int x);

struct ObjectCheck {
    bool ok = true;
    std::optional<int> witness;  // element where the criterion fails
};

// Projective iff every latching map is a monomorphism; injective iff every
// matching map is an epimorphism. Distributive lattices only.
ObjectCheck is_projective(const ModulePtr& F);
ObjectCheck is_injective(const ModulePtr& F);

} // namespace pcalc
