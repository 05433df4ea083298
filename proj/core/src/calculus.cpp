#include "pcalc/calculus.hpp"

#include <algorithm>
#include <cassert>

namespace pcalc {

namespace {

// m with m * legs[i] = targets[i] for all i; unique when the legs are
// jointly epimorphic (a colimit cocone).
Matrix factor_through_cocone(const std::vector<Matrix>& legs, const std::vector<Matrix>& targets,
                             uint32_t p) {
    std::vector<Matrix> at, bt;
    for (const auto& l : legs) at.push_back(l.transpose());
    for (const auto& t : targets) bt.push_back(t.transpose());
    auto x = solve(Matrix::vstack(at, p), Matrix::vstack(bt, p));
    assert(x);
    return x->transpose();
}

// m with legs[i] * m = targets[i]; unique when the legs are jointly
// monomorphic (a limit cone).
Matrix factor_through_cone(const std::vector<Matrix>& legs, const std::vector<Matrix>& targets,
                           uint32_t p) {
    auto x = solve(Matrix::vstack(legs, p), Matrix::vstack(targets, p));
    assert(x);
    return *x;
}

void require_distributive(const FinitePoset& P) {
    auto prof = analyze_lattice(P);
    if (!prof.is_lattice || !prof.is_distributive)
        throw PosetUnsupported("operation requires a finite distributive lattice");
}

struct ApproxData {
    ModulePtr approx;
    std::vector<std::vector<int>> nodes;  // stratum elements used at each x
    std::vector<std::vector<Matrix>> legs;
};

// Shared engine for both approximation sides. contra = false computes the
// colimit over the join stratum below x, contra = true the limit over the
// meet stratum above x.
ApproxData approx_data(const ModulePtr& F, int n, bool contra) {
    const FinitePoset& P = *F->poset;
    require_distributive(P);
    Stratum st = stratum(P, n, contra ? StratumSide::meet : StratumSide::join);

    ApproxData R;
    std::vector<int> dims(P.size());
    R.nodes.resize(P.size());
    R.legs.resize(P.size());
    for (int x = 0; x < P.size(); ++x) {
        for (int v : st.elements)
            if (contra ? P.leq(x, v) : P.leq(v, x)) R.nodes[x].push_back(v);
        VecDiagram D = restricted_diagram(*F, R.nodes[x]);
        if (!contra) {
            auto c = diagram_colimit(D);
            dims[x] = c.dim;
            R.legs[x] = std::move(c.cocone);
        } else {
            auto l = diagram_limit(D);
            dims[x] = l.dim;
            R.legs[x] = std::move(l.cone);
        }
    }

    if (P.is_grid()) {
        // Fast path: the subdiagram of elements obtained by clearing all but
        // <= n coordinates (to 0, or to the maximum on the contra side) is
        // final in the full stratum diagram; its (co)limit dimension must
        // agree with the generic computation.
        const auto& shape = P.shape();
        int k = static_cast<int>(shape.size());
        for (int x = 0; x < P.size(); ++x) {
            std::vector<int> sub;
            for (int mask = 0; mask < (1 << k); ++mask) {
                if (__builtin_popcount(static_cast<unsigned>(mask)) > n) continue;
                std::vector<int> c = P.coords(x);
                for (int i = 0; i < k; ++i)
                    if (!(mask & (1 << i))) c[i] = contra ? shape[i] - 1 : 0;
                int v = P.grid_index(c);
                if (std::find(sub.begin(), sub.end(), v) == sub.end()) sub.push_back(v);
            }
            std::sort(sub.begin(), sub.end());
            VecDiagram D = restricted_diagram(*F, sub);
            int d = contra ? diagram_limit(D).dim : diagram_colimit(D).dim;
            if (d != dims[x])
                throw ValidationError("approximation fast path disagrees with generic path at " +
                                      P.name(x));
        }
    }

    std::map<std::pair<int, int>, Matrix> maps;
    for (const auto& [a, b] : P.hasse()) {
        if (!contra) {
            // nodes[a] is a subset of nodes[b]; route each a-leg to the b-leg
            // of the same stratum element.
            std::vector<Matrix> targets;
            for (int v : R.nodes[a]) {
                auto it = std::find(R.nodes[b].begin(), R.nodes[b].end(), v);
                targets.push_back(R.legs[b][it - R.nodes[b].begin()]);
            }
            maps.emplace(std::pair{a, b}, factor_through_cocone(R.legs[a], targets, F->p));
        } else {
            std::vector<Matrix> targets;
            for (int v : R.nodes[b]) {
                auto it = std::find(R.nodes[a].begin(), R.nodes[a].end(), v);
                targets.push_back(R.legs[a][it - R.nodes[a].begin()]);
            }
            maps.emplace(std::pair{a, b}, factor_through_cone(R.legs[b], targets, F->p));
        }
    }
    R.approx = make_module(F->poset, F->p, std::move(dims), std::move(maps));
    return R;
}

NaturalTransformation counit_of(const ApproxData& A, const ModulePtr& F) {
    const FinitePoset& P = *F->poset;
    std::vector<Matrix> comps;
    for (int x = 0; x < P.size(); ++x) {
        std::vector<Matrix> targets;
        for (int v : A.nodes[x]) targets.push_back(F->map(v, x));
        comps.push_back(factor_through_cocone(A.legs[x], targets, F->p));
    }
    return make_nt(A.approx, F, std::move(comps));
}

NaturalTransformation unit_of(const ApproxData& A, const ModulePtr& F) {
    const FinitePoset& P = *F->poset;
    std::vector<Matrix> comps;
    for (int x = 0; x < P.size(); ++x) {
        std::vector<Matrix> targets;
        for (int v : A.nodes[x]) targets.push_back(F->map(x, v));
        comps.push_back(factor_through_cone(A.legs[x], targets, F->p));
    }
    return make_nt(F, A.approx, std::move(comps));
}

} // namespace

ApproximationResult codegree_approx(const ModulePtr& F, int n) {
    if (!F->poset->bottom()) throw PosetUnsupported("codegree approximation needs a bottom");
    ApproxData A = approx_data(F, n, false);
    return {A.approx, counit_of(A, F), n, Side::co};
}

KanPresentation codegree_presentation(const ModulePtr& F, int n) {
    if (!F->poset->bottom()) throw PosetUnsupported("codegree approximation needs a bottom");
    ApproxData A = approx_data(F, n, false);
    NaturalTransformation eps = counit_of(A, F);
    return {A.approx, std::move(eps), std::move(A.nodes), std::move(A.legs)};
}

ApproximationResult degree_approx(const ModulePtr& F, int n) {
    if (!F->poset->top()) throw PosetUnsupported("degree approximation needs a top");
    ApproxData A = approx_data(F, n, true);
    return {A.approx, unit_of(A, F), n, Side::contra};
}

namespace {

// Diagram of F on the cube vertices with the given bitmasks. The vertex
// assignment of a nondegenerate pairwise-cover cube is an order embedding,
// so the induced subposet diagram is exactly the cube diagram.
std::vector<int> cube_vertices(const CubeDiagram& cube, bool drop_full, bool drop_empty) {
    std::vector<int> nodes;
    int full = (1 << cube.k) - 1;
    for (int m = 0; m <= full; ++m) {
        if (drop_full && m == full) continue;
        if (drop_empty && m == 0) continue;
        nodes.push_back(cube.assignment[m]);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

bool cube_cocartesian(const ModulePtr& F, const CubeDiagram& cube) {
    std::vector<int> nodes = cube_vertices(cube, true, false);
    auto c = diagram_colimit(restricted_diagram(*F, nodes));
    if (c.dim != F->dim(cube.v)) return false;
    std::vector<Matrix> targets;
    for (int v : nodes) targets.push_back(F->map(v, cube.v));
    Matrix e = factor_through_cocone(c.cocone, targets, F->p);
    return inverse(e).has_value();
}

bool cube_cartesian(const ModulePtr& F, const CubeDiagram& cube) {
    int base = cube.assignment[0];  // meet of all cover elements
    std::vector<int> nodes = cube_vertices(cube, false, true);
    auto l = diagram_limit(restricted_diagram(*F, nodes));
    if (l.dim != F->dim(base)) return false;
    std::vector<Matrix> targets;
    for (int v : nodes) targets.push_back(F->map(base, v));
    Matrix m = factor_through_cone(l.cone, targets, F->p);
    return inverse(m).has_value();
}

} // namespace

DegreeCheck is_codegree(const ModulePtr& F, int n, CubeMode mode, long long cost_cap) {
    require_distributive(*F->poset);
    for (const auto& cube : enumerate_cubes(*F->poset, n + 1, mode, cost_cap))
        if (!cube_cocartesian(F, cube)) return {false, cube};
    return {};
}

DegreeCheck is_degree(const ModulePtr& F, int n, CubeMode mode, long long cost_cap) {
    require_distributive(*F->poset);
    for (const auto& cube : enumerate_cubes(*F->poset, n + 1, mode, cost_cap))
        if (!cube_cartesian(F, cube)) return {false, cube};
    return {};
}

DegreeCheck is_bidegree(const ModulePtr& F, int n, CubeMode mode, long long cost_cap) {
    DegreeCheck c = is_codegree(F, n, mode, cost_cap);
    if (!c.ok) return c;
    return is_degree(F, n, mode, cost_cap);
}

SubobjectResult colayer(const ModulePtr& F, int n) {
    if (n < 1) throw PreconditionFailed("layer index must be >= 1");
    if (!F->poset->bottom()) throw PosetUnsupported("colayer needs a bottom");
    ApproxData lo = approx_data(F, n - 1, false);
    ApproxData hi = approx_data(F, n, false);
    std::vector<Matrix> comps;
    for (int x = 0; x < F->poset->size(); ++x) {
        std::vector<Matrix> targets;
        for (size_t i = 0; i < lo.nodes[x].size(); ++i) {
            auto it = std::find(hi.nodes[x].begin(), hi.nodes[x].end(), lo.nodes[x][i]);
            targets.push_back(hi.legs[x][it - hi.nodes[x].begin()]);
        }
        comps.push_back(factor_through_cocone(lo.legs[x], targets, F->p));
    }
    return cokernel_nt(make_nt(lo.approx, hi.approx, std::move(comps)));
}

SubobjectResult layer(const ModulePtr& F, int n) {
    if (n < 1) throw PreconditionFailed("layer index must be >= 1");
    if (!F->poset->top()) throw PosetUnsupported("layer needs a top");
    ApproxData hi = approx_data(F, n, true);
    ApproxData lo = approx_data(F, n - 1, true);
    std::vector<Matrix> comps;  // T^nF -> T^{n-1}F
    for (int x = 0; x < F->poset->size(); ++x) {
        std::vector<Matrix> targets;
        for (size_t i = 0; i < lo.nodes[x].size(); ++i) {
            auto it = std::find(hi.nodes[x].begin(), hi.nodes[x].end(), lo.nodes[x][i]);
            targets.push_back(hi.legs[x][it - hi.nodes[x].begin()]);
        }
        comps.push_back(factor_through_cone(lo.legs[x], targets, F->p));
    }
    return kernel_nt(make_nt(hi.approx, lo.approx, std::move(comps)));
}

LatchingData latching(const ModulePtr& F, int x) {
    const FinitePoset& P = *F->poset;
    std::vector<int> below;
    for (int y = 0; y < P.size(); ++y)
        if (y != x && P.leq(y, x)) below.push_back(y);
    auto c = diagram_colimit(restricted_diagram(*F, below));
    std::vector<Matrix> targets;
    for (int y : below) targets.push_back(F->map(y, x));
    Matrix to_fx = below.empty() ? Matrix(F->dim(x), 0, F->p)
                                 : factor_through_cocone(c.cocone, targets, F->p);

    const auto& pars = P.parents(x);
    if (pars.size() == 1) {
        if (c.dim != F->dim(pars[0]))
            throw ValidationError("latching object disagrees with the unique parent at " +
                                  P.name(x));
    } else if (pars.size() >= 2) {
        // cross-check against the colimit of the punctured parent cube
        // (parents form a pairwise cover in a distributive lattice; skip the
        // check elsewhere)
        try {
            CubeDiagram cube = cube_from_cover(P, x, pars);
            auto cc = diagram_colimit(restricted_diagram(*F, cube_vertices(cube, true, false)));
            if (cc.dim != c.dim)
                throw ValidationError(
                    "latching object disagrees with the parent-cube colimit at " + P.name(x));
        } catch (const NotAPairwiseCover&) {
        }
    }
    return {x, c.dim, std::move(to_fx)};
}

LatchingData matching(const ModulePtr& F, int x) {
    const FinitePoset& P = *F->poset;
    std::vector<int> above;
    for (int y = 0; y < P.size(); ++y)
        if (y != x && P.leq(x, y)) above.push_back(y);
    auto l = diagram_limit(restricted_diagram(*F, above));
    std::vector<Matrix> targets;
    for (int y : above) targets.push_back(F->map(x, y));
    Matrix from_fx = above.empty() ? Matrix(0, F->dim(x), F->p)
                                   : factor_through_cone(l.cone, targets, F->p);

    const auto& chs = P.children(x);
    if (chs.size() == 1) {
        if (l.dim != F->dim(chs[0]))
            throw ValidationError("matching object disagrees with the unique child at " +
                                  P.name(x));
    }
    return {x, l.dim, std::move(from_fx)};
}

ObjectCheck is_projective(const ModulePtr& F) {
    require_distributive(*F->poset);
    for (int x = 0; x < F->poset->size(); ++x) {
        LatchingData L = latching(F, x);
        if (rank(L.map) != L.map.cols()) return {false, x};
    }
    return {};
}

ObjectCheck is_injective(const ModulePtr& F) {
    require_distributive(*F->poset);
    for (int x = 0; x < F->poset->size(); ++x) {
        LatchingData M = matching(F, x);
        if (rank(M.map) != M.map.rows()) return {false, x};
    }
    return {};
}

} // namespace pcalc
