#pragma once

#include "pcalc/exactness.hpp"

namespace pcalc {

enum class BlockKind { death, birth, vertical, horizontal };

// Rectangle x0..x1 times y0..y1 (inclusive) on a 2-factor grid. death:
// down-closed; birth: up-closed; vertical: full second factor; horizontal:
// full first factor. Overlapping shapes are resolved in the order
// death > vertical > horizontal > birth.
struct Block {
    BlockKind kind = BlockKind::death;
    int x0 = 0, x1 = 0, y0 = 0, y1 = 0;

    auto operator<=>(const Block&) const = default;
};

// Canonical kind for a rectangle; throws NotAnInterval when the rectangle
// is not a block shape.
Block classify_block(const FinitePoset& grid, int x0, int x1, int y0, int y1);

std::vector<int> block_elements(const FinitePoset& grid, const Block& b);

std::string block_to_string(const Block& b);

struct Summand {
    std::string label;
    ModulePtr module;
    std::string description;
    std::optional<Block> block;
    std::optional<std::vector<int>> interval;  // poset elements
    std::optional<int> generator;              // base element for a^ / av summands
};

// Every report carries a machine-verified natural isomorphism from the
// direct sum of the summands to the decomposed module.
struct DecompositionReport {
    std::vector<Summand> summands;
    NaturalTransformation iso;
};

// Interval decomposition over a poset whose Hasse diagram is a path (a
// chain, or two chains glued at the common end). Multiplicities come from
// the generalized rank invariant over path windows; the isomorphism is
// found in the transformation space and verified.
DecompositionReport an_interval_decompose(const ModulePtr& F, uint64_t seed = 0);

// Block decomposition of a codegree-1 (side co) or degree-1 (side contra)
// module on a 2-factor grid.
DecompositionReport block_decompose(const ModulePtr& F, Side side, uint64_t seed = 0);

enum class SplitDirection { section, retraction };

// Given a pointwise-exact pair incl: A -> F, proj: F -> Q with proj o incl
// = 0, solves the linear system for a natural section s: Q -> F (or
// retraction r: F -> A). Throws NoSplitting when no natural splitting
// exists.
NaturalTransformation natural_splitting(const NaturalTransformation& incl,
                                        const NaturalTransformation& proj, SplitDirection dir);

// F = B + K + C with K injective, C projective, B bidegree 1, for
// k-middle-exact modules on product-of-chains grids.
DecompositionReport bkc_decompose(const ModulePtr& F, uint64_t seed = 0);

// Interval decomposition of a bidegree-1 module on a grid: cofree part from
// the image of the constant comparison, layer part as per-axis slabs.
DecompositionReport bidegree1_interval_decompose(const ModulePtr& F, uint64_t seed = 0);

struct FreeStructure {
    bool ok = false;
    std::map<int, int> multiplicity;  // base element -> count
    std::optional<NaturalTransformation> iso;
};

// Multiset of generators of a free module (direct sum of a^ intervals),
// with verified isomorphism; ok = false when F is not free.
FreeStructure free_structure(const ModulePtr& F, uint64_t seed = 0);

// Dual: cogenerators of a direct sum of av intervals.
FreeStructure cofree_structure(const ModulePtr& F, uint64_t seed = 0);

// Splits a 2-middle-exact module on a 2-factor grid as (degree-1 part
// T^1F) + (codegree-1 part ker of the unit), with the isomorphism built
// from the unit and a solved retraction.
DecompositionReport middle_exact_split(const ModulePtr& F);

} // namespace pcalc
