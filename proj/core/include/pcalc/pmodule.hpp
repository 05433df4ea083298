#pragma once

#include "pcalc/matrix.hpp"
#include "pcalc/poset.hpp"

#include <map>
#include <optional>

namespace pcalc {

struct MissingCoverMap : ValidationError {
    using ValidationError::ValidationError;
};
struct DimensionMismatch : ValidationError {
    using ValidationError::ValidationError;
};
struct CommutativityViolation : ValidationError {
    using ValidationError::ValidationError;
};

// A functor P -> Vec over GF(p): a dimension per element and a structure
// matrix per cover pair. Composite maps for all comparable pairs are derived
// and cached at validation time; instances are immutable afterwards.
struct PersistenceModule {
    PosetPtr poset;
    uint32_t p = 2;
    std::vector<int> dims;
    std::map<std::pair<int, int>, Matrix> cover_maps;

    int dim(int x) const { return dims[x]; }
    int total_dim() const;
    bool is_zero() const;

    // Structure map F(x <= y); identity when x == y. Throws NotComparable.
    const Matrix& map(int x, int y) const;

private:
    friend std::shared_ptr<const PersistenceModule> make_module(
        PosetPtr, uint32_t, std::vector<int>, std::map<std::pair<int, int>, Matrix>);
    mutable std::map<std::pair<int, int>, Matrix> all_maps_;
};

using ModulePtr = std::shared_ptr<const PersistenceModule>;

// Validates dimensions, cover coverage and commutativity (all composites
// along cover paths must agree), then freezes the module.
ModulePtr make_module(PosetPtr poset, uint32_t p, std::vector<int> dims,
                      std::map<std::pair<int, int>, Matrix> cover_maps);

ModulePtr zero_module(PosetPtr poset, uint32_t p);

// F_I for an interval I (convex and zigzag-connected; validated).
ModulePtr interval_module(PosetPtr poset, const std::vector<int>& I, uint32_t p);

// Direct sum of F_{a^} for the listed base elements (with multiplicity);
// up_sets=false builds F_{a\/} summands instead.
ModulePtr free_module(PosetPtr poset, const std::vector<int>& generators, uint32_t p,
                      bool up_sets = true);

// Deterministic random module with pointwise dimension <= dmax, built as the
// cokernel of a map between free modules (functorial by construction).
ModulePtr random_module(PosetPtr poset, uint64_t seed, int dmax, uint32_t p);

ModulePtr direct_sum(const std::vector<ModulePtr>& parts);

// Same data over the opposite poset, with every map transposed.
ModulePtr opposite_module(const ModulePtr& F);

struct NaturalTransformation {
    ModulePtr source, target;
    std::vector<Matrix> components;  // per element

    const Matrix& at(int x) const { return components[x]; }
};

// Validates component shapes and naturality on every cover.
NaturalTransformation make_nt(ModulePtr source, ModulePtr target, std::vector<Matrix> components);

NaturalTransformation identity_nt(const ModulePtr& F);
NaturalTransformation zero_nt(const ModulePtr& F, const ModulePtr& G);
NaturalTransformation compose(const NaturalTransformation& g, const NaturalTransformation& f);

bool verify_natural_iso(const NaturalTransformation& nt);

// Pointwise inverse of a natural isomorphism.
NaturalTransformation invert_nt(const NaturalTransformation& nt);

// Finite diagram of vector spaces with generating arrows.
struct VecDiagram {
    uint32_t p = 2;
    std::vector<int> objects;  // dimension per node
    struct Arrow {
        int src, dst;
        Matrix map;
    };
    std::vector<Arrow> arrows;
};

struct ColimitResult {
    int dim;
    std::vector<Matrix> cocone;  // per node, dim x objects[node]
};

struct LimitResult {
    int dim;
    std::vector<Matrix> cone;  // per node, objects[node] x dim
};

// coker of the difference map over all arrows; cocone maps commute with the
// arrows and are jointly epimorphic.
ColimitResult diagram_colimit(const VecDiagram& D);

// ker of the difference map; dual to diagram_colimit.
LimitResult diagram_limit(const VecDiagram& D);

// Diagram of F restricted to the given poset elements, with arrows along the
// induced cover relation of the subposet.
VecDiagram restricted_diagram(const PersistenceModule& F, const std::vector<int>& nodes);

// F as a module over the explicit subposet on the given elements.
ModulePtr restrict_module(const ModulePtr& F, const std::vector<int>& elements);

struct SubobjectResult {
    ModulePtr module;
    NaturalTransformation morphism;  // inclusion (kernel/image) or projection (cokernel)
};

SubobjectResult kernel_nt(const NaturalTransformation& nt);
SubobjectResult cokernel_nt(const NaturalTransformation& nt);

struct ImageResult {
    ModulePtr module;
    NaturalTransformation inclusion;   // into the target
    NaturalTransformation projection;  // from the source
};

ImageResult image_nt(const NaturalTransformation& nt);

struct MorphismCheck {
    bool ok;
    std::optional<std::pair<int, int>> witness_cover;
};

MorphismCheck is_monomorphic(const PersistenceModule& F);
MorphismCheck is_epimorphic(const PersistenceModule& F);

// Basis of the vector space of natural transformations G -> F.
std::vector<NaturalTransformation> nt_space_basis(const ModulePtr& G, const ModulePtr& F);

// Deterministic search for a natural isomorphism G -> F by sampling the
// transformation space; nullopt if none found within the attempt cap.
std::optional<NaturalTransformation> find_natural_iso(const ModulePtr& G, const ModulePtr& F,
                                                      uint64_t seed = 0);

} // namespace pcalc
