#include "pcalc/decompose.hpp"

#include <algorithm>
#include <cassert>

namespace pcalc {

namespace {

void require_2grid(const FinitePoset& P, const char* what) {
    if (!P.is_grid() || P.shape().size() != 2)
        throw PosetUnsupported(std::string(what) + " is defined on 2-factor grids");
}

// Direct sum of the summands plus a searched-and-verified isomorphism onto
// F; every decomposition goes through here.
DecompositionReport finish_report(std::vector<Summand> sums, const ModulePtr& F, uint64_t seed) {
    std::vector<ModulePtr> mods;
    for (const auto& s : sums) mods.push_back(s.module);
    ModulePtr G = mods.empty() ? zero_module(F->poset, F->p) : direct_sum(mods);
    for (int x = 0; x < F->poset->size(); ++x)
        if (G->dim(x) != F->dim(x))
            throw ValidationError("decomposition dimensions do not add up at " +
                                  F->poset->name(x));
    auto iso = find_natural_iso(G, F, seed);
    if (!iso || !verify_natural_iso(*iso))
        throw ValidationError("no natural isomorphism found for the claimed decomposition");
    return {std::move(sums), std::move(*iso)};
}

// Element order along a Hasse path (a chain, or two chains glued at one
// end); throws PosetUnsupported for anything else.
std::vector<int> path_order(const FinitePoset& P) {
    const int n = P.size();
    if (n == 0) throw PosetUnsupported("empty poset");
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : P.hasse()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> ends;
    for (int x = 0; x < n; ++x) {
        if (adj[x].size() > 2) throw PosetUnsupported("Hasse diagram is not a path");
        if (adj[x].size() <= 1) ends.push_back(x);
    }
    if (n == 1) return {0};
    if (ends.size() != 2) throw PosetUnsupported("Hasse diagram is not a path");
    std::vector<int> order{std::min(ends[0], ends[1])};
    std::vector<char> seen(n, 0);
    seen[order[0]] = 1;
    while (static_cast<int>(order.size()) < n) {
        bool advanced = false;
        for (int y : adj[order.back()])
            if (!seen[y]) {
                seen[y] = 1;
                order.push_back(y);
                advanced = true;
                break;
            }
        if (!advanced) throw PosetUnsupported("Hasse diagram is not a path");
    }
    return order;
}

} // namespace

DecompositionReport an_interval_decompose(const ModulePtr& F, uint64_t seed) {
    const FinitePoset& P = *F->poset;
    std::vector<int> ord = path_order(P);
    const int n = P.size();

    // generalized rank invariant over path windows [i, j]
    auto r = [&](int i, int j) -> int {
        if (i < 0 || j >= n || i > j) return 0;
        std::vector<int> nodes(ord.begin() + i, ord.begin() + j + 1);
        VecDiagram D = restricted_diagram(*F, nodes);
        auto lim = diagram_limit(D);
        auto colim = diagram_colimit(D);
        return rank(colim.cocone[0] * lim.cone[0]);
    };
    std::vector<std::vector<int>> rr(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) rr[i][j] = r(i, j);
    auto rv = [&](int i, int j) { return (i < 0 || j >= n || i > j) ? 0 : rr[i][j]; };

    std::vector<Summand> sums;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int m = rv(i, j) - rv(i - 1, j) - rv(i, j + 1) + rv(i - 1, j + 1);
            if (m < 0) throw ValidationError("negative interval multiplicity");
            std::vector<int> elems(ord.begin() + i, ord.begin() + j + 1);
            std::sort(elems.begin(), elems.end());
            for (int c = 0; c < m; ++c) {
                Summand s;
                s.module = interval_module(F->poset, elems, F->p);
                s.interval = elems;
                std::string span;
                for (int e : elems) span += (span.empty() ? "" : " ") + P.name(e);
                s.description = "interval {" + span + "}";
                s.label = "I" + std::to_string(sums.size());
                sums.push_back(std::move(s));
            }
        }
    return finish_report(std::move(sums), F, seed);
}

Block classify_block(const FinitePoset& grid, int x0, int x1, int y0, int y1) {
    const auto& sh = grid.shape();
    int mx = sh[0] - 1, my = sh[1] - 1;
    Block b;
    b.x0 = x0;
    b.x1 = x1;
    b.y0 = y0;
    b.y1 = y1;
    if (x0 == 0 && y0 == 0)
        b.kind = BlockKind::death;
    else if (y0 == 0 && y1 == my)
        b.kind = BlockKind::vertical;
    else if (x0 == 0 && x1 == mx)
        b.kind = BlockKind::horizontal;
    else if (x1 == mx && y1 == my)
        b.kind = BlockKind::birth;
    else
        throw NotAnInterval("rectangle is not a block");
    return b;
}

std::vector<int> block_elements(const FinitePoset& grid, const Block& b) {
    std::vector<int> elems;
    for (int x = 0; x < grid.size(); ++x) {
        const auto& c = grid.coords(x);
        if (c[0] >= b.x0 && c[0] <= b.x1 && c[1] >= b.y0 && c[1] <= b.y1) elems.push_back(x);
    }
    return elems;
}

std::string block_to_string(const Block& b) {
    static const char* names[] = {"death", "birth", "vertical", "horizontal"};
    return std::string(names[static_cast<int>(b.kind)]) + " [" + std::to_string(b.x0) + "," +
           std::to_string(b.x1) + "]x[" + std::to_string(b.y0) + "," + std::to_string(b.y1) + "]";
}

DecompositionReport block_decompose(const ModulePtr& F, Side side, uint64_t seed) {
    const FinitePoset& P = *F->poset;
    require_2grid(P, "block decomposition");
    int mx = P.shape()[0] - 1, my = P.shape()[1] - 1;

    DegreeCheck dc = side == Side::co ? is_codegree(F, 1) : is_degree(F, 1);
    if (!dc.ok)
        throw PreconditionFailed(std::string("module is not ") +
                                 (side == Side::co ? "codegree" : "degree") +
                                 " 1; witness cube at " + P.name(dc.witness->v));

    Stratum st = stratum(P, 1, side == Side::co ? StratumSide::join : StratumSide::meet);
    ModulePtr R = restrict_module(F, st.elements);
    DecompositionReport axes = an_interval_decompose(R, seed);

    std::vector<Summand> sums;
    for (const auto& s : axes.summands) {
        // read the interval back in grid coordinates
        std::vector<std::vector<int>> coords;
        for (int e : *s.interval) coords.push_back(P.coords(P.index_of(R->poset->name(e))));
        int xlo = coords[0][0], xhi = coords[0][0], ylo = coords[0][1], yhi = coords[0][1];
        bool has_corner = false;
        int cx = side == Side::co ? 0 : mx, cy = side == Side::co ? 0 : my;
        for (const auto& c : coords) {
            xlo = std::min(xlo, c[0]);
            xhi = std::max(xhi, c[0]);
            ylo = std::min(ylo, c[1]);
            yhi = std::max(yhi, c[1]);
            if (c[0] == cx && c[1] == cy) has_corner = true;
        }
        // extend the stratum interval by the Kan formula: the corner element
        // gives a closed rectangle, a pure-axis interval gives a slab
        Block b;
        if (side == Side::co) {
            if (has_corner)
                b = classify_block(P, 0, xhi, 0, yhi);
            else if (ylo == 0 && yhi == 0)
                b = classify_block(P, xlo, xhi, 0, my);
            else
                b = classify_block(P, 0, mx, ylo, yhi);
        } else {
            if (has_corner)
                b = classify_block(P, xlo, mx, ylo, my);
            else if (ylo == my && yhi == my)
                b = classify_block(P, xlo, xhi, 0, my);
            else
                b = classify_block(P, 0, mx, ylo, yhi);
        }
        Summand out;
        out.block = b;
        out.interval = block_elements(P, b);
        out.module = interval_module(F->poset, *out.interval, F->p);
        out.description = block_to_string(b);
        out.label = "B" + std::to_string(sums.size());
        sums.push_back(std::move(out));
    }
    std::sort(sums.begin(), sums.end(),
              [](const Summand& a, const Summand& b) { return *a.block < *b.block; });
    for (size_t i = 0; i < sums.size(); ++i) sums[i].label = "B" + std::to_string(i);
    return finish_report(std::move(sums), F, seed);
}

namespace {

// Stacked exact linear system in matrix unknowns: constraints of the form
// sum_k L_k * U_{v_k} * R_k = rhs.
class MatrixSystem {
public:
    explicit MatrixSystem(uint32_t p) : p_(p) {}

    int add_var(int rows, int cols) {
        shapes_.emplace_back(rows, cols);
        return static_cast<int>(shapes_.size()) - 1;
    }

    struct Term {
        Matrix left;
        int var;
        Matrix right;
    };

    void add_constraint(std::vector<Term> terms, Matrix rhs) {
        constraints_.emplace_back(std::move(terms), std::move(rhs));
    }

    std::optional<std::vector<Matrix>> solve_all() const {
        std::vector<int> off{0};
        for (auto [r, c] : shapes_) off.push_back(off.back() + r * c);
        int nunk = off.back();
        int nrows = 0;
        for (const auto& [terms, rhs] : constraints_) nrows += rhs.rows() * rhs.cols();
        Matrix A(nrows, nunk, p_);
        Matrix B(nrows, 1, p_);
        int r0 = 0;
        for (const auto& [terms, rhs] : constraints_) {
            for (int i = 0; i < rhs.rows(); ++i)
                for (int j = 0; j < rhs.cols(); ++j) {
                    int row = r0 + i * rhs.cols() + j;
                    B.at(row, 0) = rhs(i, j);
                    for (const auto& t : terms) {
                        auto [vr, vc] = shapes_[t.var];
                        for (int a = 0; a < vr; ++a) {
                            if (!t.left(i, a)) continue;
                            for (int b = 0; b < vc; ++b) {
                                int col = off[t.var] + a * vc + b;
                                A.at(row, col) =
                                    gf::add(A(row, col), gf::mul(t.left(i, a), t.right(b, j), p_), p_);
                            }
                        }
                    }
                }
            r0 += rhs.rows() * rhs.cols();
        }
        auto X = solve(A, B);
        if (!X) return std::nullopt;
        std::vector<Matrix> out;
        for (size_t v = 0; v < shapes_.size(); ++v) {
            auto [vr, vc] = shapes_[v];
            Matrix m(vr, vc, p_);
            for (int a = 0; a < vr; ++a)
                for (int b = 0; b < vc; ++b) m.at(a, b) = (*X)(off[v] + a * vc + b, 0);
            out.push_back(std::move(m));
        }
        return out;
    }

private:
    uint32_t p_;
    std::vector<std::pair<int, int>> shapes_;
    std::vector<std::pair<std::vector<Term>, Matrix>> constraints_;
};

} // namespace

NaturalTransformation natural_splitting(const NaturalTransformation& incl,
                                        const NaturalTransformation& proj, SplitDirection dir) {
    const ModulePtr& A = incl.source;
    const ModulePtr& F = incl.target;
    const ModulePtr& Q = proj.target;
    if (proj.source != F) throw ValidationError("splitting input is not a composable pair");
    const FinitePoset& P = *F->poset;
    const uint32_t p = F->p;
    for (int x = 0; x < P.size(); ++x) {
        if (!(proj.at(x) * incl.at(x)).is_zero())
            throw PreconditionFailed("sequence does not compose to zero at " + P.name(x));
        if (rank(incl.at(x)) != A->dim(x) || rank(proj.at(x)) != Q->dim(x) ||
            A->dim(x) + Q->dim(x) != F->dim(x))
            throw PreconditionFailed("sequence is not pointwise exact at " + P.name(x));
    }

    MatrixSystem sys(p);
    const ModulePtr& src = dir == SplitDirection::section ? Q : F;
    const ModulePtr& dst = dir == SplitDirection::section ? F : A;
    std::vector<int> var(P.size());
    for (int x = 0; x < P.size(); ++x) var[x] = sys.add_var(dst->dim(x), src->dim(x));
    for (const auto& [a, b] : P.hasse()) {
        // naturality: dst(a<=b) * U_a - U_b * src(a<=b) = 0
        sys.add_constraint({{dst->cover_maps.at({a, b}), var[a], Matrix::identity(src->dim(a), p)},
                            {-Matrix::identity(dst->dim(b), p), var[b], src->cover_maps.at({a, b})}},
                           Matrix(dst->dim(b), src->dim(a), p));
    }
    for (int x = 0; x < P.size(); ++x) {
        if (dir == SplitDirection::section)
            // proj_x * s_x = id
            sys.add_constraint({{proj.at(x), var[x], Matrix::identity(Q->dim(x), p)}},
                               Matrix::identity(Q->dim(x), p));
        else
            // r_x * incl_x = id
            sys.add_constraint({{Matrix::identity(A->dim(x), p), var[x], incl.at(x)}},
                               Matrix::identity(A->dim(x), p));
    }
    auto sol = sys.solve_all();
    if (!sol) throw NoSplitting("no natural splitting exists");
    return make_nt(src, dst, std::move(*sol));
}

DecompositionReport bkc_decompose(const ModulePtr& F, uint64_t seed) {
    const FinitePoset& P = *F->poset;
    if (!P.is_grid()) throw PosetUnsupported("three-part splitting needs a product of chains");
    int factors = static_cast<int>(P.shape().size());
    for (int k = 2; k <= factors; ++k) {
        DegreeCheck c = is_k_middle_exact(F, k, CubeMode::full);
        if (!c.ok)
            throw PreconditionFailed("module is not " + std::to_string(k) +
                                     "-middle-exact; witness cube at " + P.name(c.witness->v));
    }
    ApproximationResult up = degree_approx(F, 1);
    ApproximationResult down = codegree_approx(F, 1);
    ModulePtr K = kernel_nt(up.comparison).module;
    ModulePtr C = cokernel_nt(down.comparison).module;
    ModulePtr B = codegree_approx(up.approx, 1).approx;

    ObjectCheck ik = is_injective(K);
    if (!ik.ok) throw ValidationError("kernel part failed the injectivity check");
    ObjectCheck pc = is_projective(C);
    if (!pc.ok) throw ValidationError("cokernel part failed the projectivity check");
    if (!is_bidegree(B, 1).ok) throw ValidationError("middle part failed the bidegree check");

    std::vector<Summand> sums;
    sums.push_back({"B", B, "bidegree-1 part", {}, {}, {}});
    sums.push_back({"K", K, "injective part", {}, {}, {}});
    sums.push_back({"C", C, "projective part", {}, {}, {}});
    return finish_report(std::move(sums), F, seed);
}

DecompositionReport bidegree1_interval_decompose(const ModulePtr& F, uint64_t seed) {
    const FinitePoset& P = *F->poset;
    if (!P.is_grid()) throw PosetUnsupported("interval decomposition needs a grid");
    DegreeCheck dc = is_bidegree(F, 1);
    if (!dc.ok)
        throw PreconditionFailed("module is not bidegree 1; witness cube at " +
                                 P.name(dc.witness->v));
    const uint32_t p = F->p;
    int bottom = *P.bottom();

    // cofree part: image of the constant comparison at the bottom value
    std::vector<int> cdims(P.size(), F->dim(bottom));
    std::map<std::pair<int, int>, Matrix> cmaps;
    for (const auto& [a, b] : P.hasse())
        cmaps.emplace(std::pair{a, b}, Matrix::identity(F->dim(bottom), p));
    ModulePtr T0 = make_module(F->poset, p, std::move(cdims), std::move(cmaps));
    std::vector<Matrix> comps;
    for (int x = 0; x < P.size(); ++x) comps.push_back(F->map(bottom, x));
    ModulePtr K = image_nt(make_nt(T0, F, std::move(comps))).module;
    FreeStructure cf = cofree_structure(K, seed);
    if (!cf.ok) throw ValidationError("image of the constant part is not cofree");

    std::vector<Summand> sums;
    for (const auto& [a, mult] : cf.multiplicity)
        for (int c = 0; c < mult; ++c) {
            Summand s;
            s.generator = a;
            s.interval = P.down_set(a);
            std::sort(s.interval->begin(), s.interval->end());
            s.module = interval_module(F->poset, *s.interval, p);
            s.description = "down-set of " + P.name(a);
            s.label = "K" + std::to_string(sums.size());
            sums.push_back(std::move(s));
        }

    // layer part: the first colayer splits along the axes into slabs
    ModulePtr D1 = colayer(F, 1).module;
    int nf = static_cast<int>(P.shape().size());
    for (int axis = 0; axis < nf; ++axis) {
        std::vector<int> chain;
        for (int t = 0; t < P.shape()[axis]; ++t) {
            std::vector<int> c(nf, 0);
            c[axis] = t;
            chain.push_back(P.grid_index(c));
        }
        ModulePtr Rc = restrict_module(D1, chain);
        DecompositionReport rep = an_interval_decompose(Rc, seed);
        for (const auto& iv : rep.summands) {
            int lo = P.shape()[axis], hi = -1;
            for (int e : *iv.interval) {
                int t = P.coords(P.index_of(Rc->poset->name(e)))[axis];
                lo = std::min(lo, t);
                hi = std::max(hi, t);
            }
            std::vector<int> elems;
            for (int x = 0; x < P.size(); ++x)
                if (P.coords(x)[axis] >= lo && P.coords(x)[axis] <= hi) elems.push_back(x);
            Summand s;
            s.interval = elems;
            s.module = interval_module(F->poset, elems, p);
            s.description = "slab axis " + std::to_string(axis) + " [" + std::to_string(lo) +
                            "," + std::to_string(hi) + "]";
            s.label = "D" + std::to_string(sums.size());
            sums.push_back(std::move(s));
        }
    }
    return finish_report(std::move(sums), F, seed);
}

FreeStructure free_structure(const ModulePtr& F, uint64_t seed) {
    const FinitePoset& P = *F->poset;
    FreeStructure out;
    std::vector<int> gens;
    for (int a = 0; a < P.size(); ++a) {
        LatchingData L = latching(F, a);
        int mult = F->dim(a) - rank(L.map);
        if (mult > 0) out.multiplicity[a] = mult;
        for (int c = 0; c < mult; ++c) gens.push_back(a);
    }
    ModulePtr G = free_module(F->poset, gens, F->p, true);
    if (G->dims != F->dims) return out;
    auto iso = find_natural_iso(G, F, seed);
    if (!iso) return out;
    out.ok = true;
    out.iso = std::move(*iso);
    return out;
}

FreeStructure cofree_structure(const ModulePtr& F, uint64_t seed) {
    const FinitePoset& P = *F->poset;
    FreeStructure out;
    std::vector<int> gens;
    for (int a = 0; a < P.size(); ++a) {
        LatchingData M = matching(F, a);
        int mult = F->dim(a) - rank(M.map);
        if (mult > 0) out.multiplicity[a] = mult;
        for (int c = 0; c < mult; ++c) gens.push_back(a);
    }
    ModulePtr G = free_module(F->poset, gens, F->p, false);
    if (G->dims != F->dims) return out;
    auto iso = find_natural_iso(G, F, seed);
    if (!iso) return out;
    out.ok = true;
    out.iso = std::move(*iso);
    return out;
}

DecompositionReport middle_exact_split(const ModulePtr& F) {
    const FinitePoset& P = *F->poset;
    require_2grid(P, "middle-exact splitting");
    PairCheck me = is_2_middle_exact(F);
    if (!me.ok)
        throw PreconditionFailed("module is not 2-middle-exact; witness pair (" +
                                 P.name(me.witness->first) + ", " + P.name(me.witness->second) +
                                 ")");
    ApproximationResult up = degree_approx(F, 1);
    SubobjectResult K = kernel_nt(up.comparison);
    for (int x = 0; x < P.size(); ++x)
        if (rank(up.comparison.at(x)) != up.approx->dim(x))
            throw ValidationError("unit of a 2-middle-exact module is not pointwise epimorphic");

    NaturalTransformation r = natural_splitting(K.morphism, up.comparison,
                                                SplitDirection::retraction);
    ModulePtr S = direct_sum({up.approx, K.module});
    std::vector<Matrix> comps;
    for (int x = 0; x < P.size(); ++x)
        comps.push_back(Matrix::vstack(up.comparison.at(x), r.at(x)));
    NaturalTransformation phi = make_nt(F, S, std::move(comps));
    NaturalTransformation iso = invert_nt(phi);

    if (!is_degree(up.approx, 1).ok)
        throw ValidationError("degree-1 summand failed its degree check");
    if (!is_codegree(K.module, 1).ok)
        throw ValidationError("codegree-1 summand failed its codegree check");

    DecompositionReport rep;
    rep.summands.push_back({"degree1", up.approx, "degree-1 part", {}, {}, {}});
    rep.summands.push_back({"codegree1", K.module, "codegree-1 part", {}, {}, {}});
    rep.iso = std::move(iso);
    return rep;
}

} // namespace pcalc
