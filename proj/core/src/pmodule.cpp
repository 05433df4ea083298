#include "pcalc/pmodule.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace pcalc {

int PersistenceModule::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

bool PersistenceModule::is_zero() const { return total_dim() == 0; }

const Matrix& PersistenceModule::map(int x, int y) const {
    if (!poset->leq(x, y)) throw NotComparable(poset->name(x) + " is not below " + poset->name(y));
    return all_maps_.at({x, y});
}

ModulePtr make_module(PosetPtr poset, uint32_t p, std::vector<int> dims,
                      std::map<std::pair<int, int>, Matrix> cover_maps) {
    auto F = std::make_shared<PersistenceModule>();
    F->poset = std::move(poset);
    F->p = p;
    F->dims = std::move(dims);
    F->cover_maps = std::move(cover_maps);
    const FinitePoset& P = *F->poset;
    if (static_cast<int>(F->dims.size()) != P.size())
        throw DimensionMismatch("dims must cover every poset element");
    for (int d : F->dims)
        if (d < 0) throw DimensionMismatch("negative dimension");
    for (const auto& [a, b] : P.hasse()) {
        auto it = F->cover_maps.find({a, b});
        if (it == F->cover_maps.end())
            throw MissingCoverMap("missing structure map " + P.name(a) + " -> " + P.name(b));
        const Matrix& m = it->second;
        if (m.rows() != F->dims[b] || m.cols() != F->dims[a])
            throw DimensionMismatch("structure map " + P.name(a) + " -> " + P.name(b) +
                                    " has wrong shape");
        if (m.p() != p) throw DimensionMismatch("structure map over wrong field");
    }
    if (F->cover_maps.size() != P.hasse().size())
        throw MissingCoverMap("structure map on a pair that is not a cover");

    // Derive composites in topological order. For each y, phi(x,y) is defined
    // through the first parent above x; every other parent path must agree,
    // which verifies commutativity on all diamonds.
    auto& phi = F->all_maps_;
    for (int x = 0; x < P.size(); ++x) phi.emplace(std::pair{x, x}, Matrix::identity(F->dims[x], p));
    for (int y : P.topo_order()) {
        const auto& pars = P.parents(y);
        for (int x = 0; x < P.size(); ++x) {
            if (x == y || !P.leq(x, y)) continue;
            for (int a : pars)
                if (P.leq(x, a)) {
                    phi.emplace(std::pair{x, y}, F->cover_maps.at({a, y}) * phi.at({x, a}));
                    break;
                }
        }
        for (int a : pars)
            for (int x = 0; x < P.size(); ++x)
                if (P.leq(x, a) && F->cover_maps.at({a, y}) * phi.at({x, a}) != phi.at({x, y}))
                    throw CommutativityViolation("paths from " + P.name(x) + " to " + P.name(y) +
                                                 " through parent " + P.name(a) + " disagree");
    }
    return F;
}

ModulePtr zero_module(PosetPtr poset, uint32_t p) {
    std::vector<int> dims(poset->size(), 0);
    std::map<std::pair<int, int>, Matrix> maps;
    for (const auto& [a, b] : poset->hasse()) maps.emplace(std::pair{a, b}, Matrix(0, 0, p));
    return make_module(poset, p, std::move(dims), std::move(maps));
}

ModulePtr interval_module(PosetPtr poset, const std::vector<int>& I, uint32_t p) {
    const FinitePoset& P = *poset;
    std::vector<char> in(P.size(), 0);
    for (int x : I) in[x] = 1;
    // convexity
    for (int x : I)
        for (int y : I)
            for (int z = 0; z < P.size(); ++z)
                if (!in[z] && P.leq(x, z) && P.leq(z, y))
                    throw NotAnInterval("not convex: " + P.name(z) + " lies between " + P.name(x) +
                                        " and " + P.name(y));
    // zigzag connectivity in the comparability graph on I
    if (!I.empty()) {
        std::vector<int> comp;
        std::vector<char> seen(P.size(), 0);
        comp.push_back(I.front());
        seen[I.front()] = 1;
        for (size_t h = 0; h < comp.size(); ++h)
            for (int y : I)
                if (!seen[y] && (P.leq(comp[h], y) || P.leq(y, comp[h]))) {
                    seen[y] = 1;
                    comp.push_back(y);
                }
        for (int x : I)
            if (!seen[x]) throw NotAnInterval("not zigzag-connected at " + P.name(x));
    }
    std::vector<int> dims(P.size(), 0);
    for (int x : I) dims[x] = 1;
    std::map<std::pair<int, int>, Matrix> maps;
    for (const auto& [a, b] : P.hasse()) {
        Matrix m(dims[b], dims[a], p);
        if (in[a] && in[b]) m.at(0, 0) = 1;
        maps.emplace(std::pair{a, b}, std::move(m));
    }
    return make_module(poset, p, std::move(dims), std::move(maps));
}

ModulePtr free_module(PosetPtr poset, const std::vector<int>& generators, uint32_t p,
                      bool up_sets) {
    const FinitePoset& P = *poset;
    std::vector<int> gens = generators;
    std::sort(gens.begin(), gens.end());
    auto supported = [&](int g, int x) { return up_sets ? P.leq(g, x) : P.leq(x, g); };
    std::vector<std::vector<int>> basis(P.size());
    for (int x = 0; x < P.size(); ++x)
        for (size_t gi = 0; gi < gens.size(); ++gi)
            if (supported(gens[gi], x)) basis[x].push_back(static_cast<int>(gi));
    std::vector<int> dims(P.size());
    for (int x = 0; x < P.size(); ++x) dims[x] = static_cast<int>(basis[x].size());
    std::map<std::pair<int, int>, Matrix> maps;
    for (const auto& [a, b] : P.hasse()) {
        Matrix m(dims[b], dims[a], p);
        for (int i = 0; i < dims[b]; ++i)
            for (int j = 0; j < dims[a]; ++j)
                if (basis[b][i] == basis[a][j]) m.at(i, j) = 1;
        maps.emplace(std::pair{a, b}, std::move(m));
    }
    return make_module(poset, p, std::move(dims), std::move(maps));
}

ModulePtr random_module(PosetPtr poset, uint64_t seed, int dmax, uint32_t p) {
    if (dmax <= 0) return zero_module(poset, p);
    std::mt19937_64 rng(seed);
    const int n = poset->size();
    int ngen = 1 + static_cast<int>(rng() % static_cast<uint64_t>(dmax));
    std::vector<int> gens(ngen), rels;
    for (int& g : gens) g = static_cast<int>(rng() % n);
    int nrel = static_cast<int>(rng() % static_cast<uint64_t>(ngen + 1));
    for (int j = 0; j < nrel; ++j) rels.push_back(static_cast<int>(rng() % n));
    std::sort(gens.begin(), gens.end());
    std::sort(rels.begin(), rels.end());
    ModulePtr G = free_module(poset, gens, p);
    ModulePtr R = free_module(poset, rels, p);
    // natural map R -> G: entry (i,j) may be nonzero only when gen_i <= rel_j
    Matrix psi(ngen, nrel, p);
    for (int i = 0; i < ngen; ++i)
        for (int j = 0; j < nrel; ++j)
            if (poset->leq(gens[i], rels[j])) psi.at(i, j) = static_cast<uint32_t>(rng() % p);
    std::vector<Matrix> comps;
    for (int x = 0; x < n; ++x) {
        std::vector<int> gb, rb;
        for (int i = 0; i < ngen; ++i)
            if (poset->leq(gens[i], x)) gb.push_back(i);
        for (int j = 0; j < nrel; ++j)
            if (poset->leq(rels[j], x)) rb.push_back(j);
        Matrix c(static_cast<int>(gb.size()), static_cast<int>(rb.size()), p);
        for (size_t i = 0; i < gb.size(); ++i)
            for (size_t j = 0; j < rb.size(); ++j) c.at(static_cast<int>(i), static_cast<int>(j)) = psi(gb[i], rb[j]);
        comps.push_back(std::move(c));
    }
    return cokernel_nt(make_nt(R, G, std::move(comps))).module;
}

ModulePtr direct_sum(const std::vector<ModulePtr>& parts) {
    if (parts.empty()) throw ValidationError("direct_sum of nothing");
    PosetPtr P = parts.front()->poset;
    uint32_t p = parts.front()->p;
    for (const auto& f : parts)
        if (f->poset != P || f->p != p)
            throw ValidationError("direct_sum requires a common poset and field");
    std::vector<int> dims(P->size(), 0);
    for (int x = 0; x < P->size(); ++x)
        for (const auto& f : parts) dims[x] += f->dim(x);
    std::map<std::pair<int, int>, Matrix> maps;
    for (const auto& [a, b] : P->hasse()) {
        std::vector<Matrix> blocks;
        for (const auto& f : parts) blocks.push_back(f->cover_maps.at({a, b}));
        maps.emplace(std::pair{a, b}, Matrix::block_diag(blocks, p));
    }
    return make_module(P, p, std::move(dims), std::move(maps));
}

ModulePtr opposite_module(const ModulePtr& F) {
    PosetPtr op = F->poset->opposite();
    std::map<std::pair<int, int>, Matrix> maps;
    for (const auto& [cov, m] : F->cover_maps) maps.emplace(std::pair{cov.second, cov.first}, m.transpose());
    return make_module(op, F->p, F->dims, std::move(maps));
}

NaturalTransformation make_nt(ModulePtr source, ModulePtr target,
                              std::vector<Matrix> components) {
    if (source->poset != target->poset || source->p != target->p)
        throw ValidationError("natural transformation across different posets/fields");
    const FinitePoset& P = *source->poset;
    if (static_cast<int>(components.size()) != P.size())
        throw DimensionMismatch("one component per poset element required");
    for (int x = 0; x < P.size(); ++x)
        if (components[x].rows() != target->dim(x) || components[x].cols() != source->dim(x))
            throw DimensionMismatch("component shape mismatch at " + P.name(x));
    for (const auto& [a, b] : P.hasse())
        if (target->cover_maps.at({a, b}) * components[a] !=
            components[b] * source->cover_maps.at({a, b}))
            throw ValidationError("naturality fails on cover " + P.name(a) + " -> " + P.name(b));
    return {std::move(source), std::move(target), std::move(components)};
}

NaturalTransformation identity_nt(const ModulePtr& F) {
    std::vector<Matrix> comps;
    for (int x = 0; x < F->poset->size(); ++x) comps.push_back(Matrix::identity(F->dim(x), F->p));
    return make_nt(F, F, std::move(comps));
}

NaturalTransformation zero_nt(const ModulePtr& F, const ModulePtr& G) {
    std::vector<Matrix> comps;
    for (int x = 0; x < F->poset->size(); ++x) comps.push_back(Matrix(G->dim(x), F->dim(x), F->p));
    return make_nt(F, G, std::move(comps));
}

NaturalTransformation compose(const NaturalTransformation& g, const NaturalTransformation& f) {
    if (f.target != g.source) throw ValidationError("composition source/target mismatch");
    std::vector<Matrix> comps;
    for (size_t x = 0; x < f.components.size(); ++x) comps.push_back(g.components[x] * f.components[x]);
    return make_nt(f.source, g.target, std::move(comps));
}

bool verify_natural_iso(const NaturalTransformation& nt) {
    for (const auto& c : nt.components) {
        if (c.rows() != c.cols()) return false;
        if (!inverse(c)) return false;
    }
    return true;
}

NaturalTransformation invert_nt(const NaturalTransformation& nt) {
    std::vector<Matrix> comps;
    for (const auto& c : nt.components) {
        auto inv = inverse(c);
        if (!inv) throw ValidationError("invert_nt on a non-isomorphism");
        comps.push_back(*inv);
    }
    return make_nt(nt.target, nt.source, std::move(comps));
}

ColimitResult diagram_colimit(const VecDiagram& D) {
    const uint32_t p = D.p;
    const int nn = static_cast<int>(D.objects.size());
    std::vector<int> off(nn + 1, 0);
    for (int i = 0; i < nn; ++i) off[i + 1] = off[i] + D.objects[i];
    int total = off[nn];
    int acols = 0;
    for (const auto& a : D.arrows) acols += D.objects[a.src];
    Matrix diff(total, acols, p);
    int c = 0;
    for (const auto& a : D.arrows) {
        int w = D.objects[a.src];
        diff.set_block(off[a.dst], c, a.map);
        for (int j = 0; j < w; ++j)
            diff.at(off[a.src] + j, c + j) = gf::sub(diff(off[a.src] + j, c + j), 1, p);
        c += w;
    }
    auto [Q, d] = cokernel(diff);
    ColimitResult r;
    r.dim = d;
    for (int i = 0; i < nn; ++i) r.cocone.push_back(Q.submatrix(0, off[i], d, D.objects[i]));
    return r;
}

LimitResult diagram_limit(const VecDiagram& D) {
    const uint32_t p = D.p;
    const int nn = static_cast<int>(D.objects.size());
    std::vector<int> off(nn + 1, 0);
    for (int i = 0; i < nn; ++i) off[i + 1] = off[i] + D.objects[i];
    int total = off[nn];
    int arows = 0;
    for (const auto& a : D.arrows) arows += D.objects[a.dst];
    Matrix diff(arows, total, p);
    int r0 = 0;
    for (const auto& a : D.arrows) {
        int h = D.objects[a.dst];
        diff.set_block(r0, off[a.src], a.map);
        for (int i = 0; i < h; ++i)
            diff.at(r0 + i, off[a.dst] + i) = gf::sub(diff(r0 + i, off[a.dst] + i), 1, p);
        r0 += h;
    }
    Matrix K = kernel_basis(diff);
    LimitResult r;
    r.dim = K.cols();
    for (int i = 0; i < nn; ++i) r.cone.push_back(K.submatrix(off[i], 0, D.objects[i], K.cols()));
    return r;
}

VecDiagram restricted_diagram(const PersistenceModule& F, const std::vector<int>& nodes) {
    const FinitePoset& P = *F.poset;
    VecDiagram D;
    D.p = F.p;
    for (int x : nodes) D.objects.push_back(F.dim(x));
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (i == j || !P.leq(nodes[i], nodes[j])) continue;
            if (nodes[i] == nodes[j]) continue;
            bool is_cover = true;  // cover in the induced subposet
            for (size_t l = 0; l < nodes.size(); ++l)
                if (l != i && l != j && P.leq(nodes[i], nodes[l]) && P.leq(nodes[l], nodes[j])) {
                    is_cover = false;
                    break;
                }
            if (is_cover)
                D.arrows.push_back({static_cast<int>(i), static_cast<int>(j), F.map(nodes[i], nodes[j])});
        }
    return D;
}

ModulePtr restrict_module(const ModulePtr& F, const std::vector<int>& elements) {
    const FinitePoset& P = *F->poset;
    std::vector<std::string> names;
    for (int x : elements) names.push_back(P.name(x));
    // induced covers of the subposet
    std::vector<std::pair<std::string, std::string>> covers;
    for (int a : elements)
        for (int b : elements) {
            if (a == b || !P.leq(a, b)) continue;
            bool is_cover = true;
            for (int z : elements)
                if (z != a && z != b && P.leq(a, z) && P.leq(z, b)) {
                    is_cover = false;
                    break;
                }
            if (is_cover) covers.emplace_back(P.name(a), P.name(b));
        }
    PosetPtr Q = FinitePoset::explicit_poset(names, covers);
    std::vector<int> dims(Q->size());
    for (int x : elements) dims[Q->index_of(P.name(x))] = F->dim(x);
    std::map<std::pair<int, int>, Matrix> maps;
    for (const auto& [a, b] : Q->hasse())
        maps.emplace(std::pair{a, b},
                     F->map(P.index_of(Q->name(a)), P.index_of(Q->name(b))));
    return make_module(Q, F->p, std::move(dims), std::move(maps));
}

SubobjectResult kernel_nt(const NaturalTransformation& nt) {
    const ModulePtr& F = nt.source;
    const FinitePoset& P = *F->poset;
    std::vector<Matrix> incl;
    std::vector<int> dims(P.size());
    for (int x = 0; x < P.size(); ++x) {
        incl.push_back(kernel_basis(nt.at(x)));
        dims[x] = incl.back().cols();
    }
    std::map<std::pair<int, int>, Matrix> maps;
    for (const auto& [a, b] : P.hasse()) {
        auto m = solve(incl[b], F->cover_maps.at({a, b}) * incl[a]);
        assert(m);  // the kernel is functorial
        maps.emplace(std::pair{a, b}, std::move(*m));
    }
    ModulePtr K = make_module(F->poset, F->p, std::move(dims), std::move(maps));
    return {K, make_nt(K, F, std::move(incl))};
}

SubobjectResult cokernel_nt(const NaturalTransformation& nt) {
    const ModulePtr& G = nt.target;
    const FinitePoset& P = *G->poset;
    std::vector<Matrix> proj;
    std::vector<int> dims(P.size());
    for (int x = 0; x < P.size(); ++x) {
        proj.push_back(cokernel(nt.at(x)).Q);
        dims[x] = proj.back().rows();
    }
    std::map<std::pair<int, int>, Matrix> maps;
    for (const auto& [a, b] : P.hasse()) {
        // unique c with c * proj_a = proj_b * G(a<=b)
        auto ct = solve(proj[a].transpose(), (proj[b] * G->cover_maps.at({a, b})).transpose());
        assert(ct);
        maps.emplace(std::pair{a, b}, ct->transpose());
    }
    ModulePtr C = make_module(G->poset, G->p, std::move(dims), std::move(maps));
    return {C, make_nt(G, C, std::move(proj))};
}

ImageResult image_nt(const NaturalTransformation& nt) {
    const ModulePtr& F = nt.source;
    const ModulePtr& G = nt.target;
    const FinitePoset& P = *G->poset;
    std::vector<Matrix> incl, proj;
    std::vector<int> dims(P.size());
    for (int x = 0; x < P.size(); ++x) {
        incl.push_back(column_space_basis(nt.at(x)));
        dims[x] = incl.back().cols();
        auto pr = solve(incl.back(), nt.at(x));
        assert(pr);
        proj.push_back(std::move(*pr));
    }
    std::map<std::pair<int, int>, Matrix> maps;
    for (const auto& [a, b] : P.hasse()) {
        auto m = solve(incl[b], G->cover_maps.at({a, b}) * incl[a]);
        assert(m);
        maps.emplace(std::pair{a, b}, std::move(*m));
    }
    ModulePtr I = make_module(G->poset, G->p, std::move(dims), std::move(maps));
    return {I, make_nt(I, G, std::move(incl)), make_nt(F, I, std::move(proj))};
}

MorphismCheck is_monomorphic(const PersistenceModule& F) {
    for (const auto& [cov, m] : F.cover_maps)
        if (rank(m) != m.cols()) return {false, cov};
    return {true, std::nullopt};
}

MorphismCheck is_epimorphic(const PersistenceModule& F) {
    for (const auto& [cov, m] : F.cover_maps)
        if (rank(m) != m.rows()) return {false, cov};
    return {true, std::nullopt};
}

std::vector<NaturalTransformation> nt_space_basis(const ModulePtr& G, const ModulePtr& F) {
    if (G->poset != F->poset || G->p != F->p)
        throw ValidationError("nt_space_basis across different posets/fields");
    const FinitePoset& P = *G->poset;
    const uint32_t p = G->p;
    // unknowns: entries of eta_x, row-major, blocks in element order
    std::vector<int> off(P.size() + 1, 0);
    for (int x = 0; x < P.size(); ++x) off[x + 1] = off[x] + F->dim(x) * G->dim(x);
    int nunk = off[P.size()];
    int nrows = 0;
    for (const auto& [a, b] : P.hasse()) nrows += F->dim(b) * G->dim(a);
    Matrix A(nrows, nunk, p);
    int r0 = 0;
    for (const auto& [a, b] : P.hasse()) {
        const Matrix& Fm = F->cover_maps.at({a, b});  // F(b) x F(a)
        const Matrix& Gm = G->cover_maps.at({a, b});  // G(b) x G(a)
        // constraint: Fm * eta_a - eta_b * Gm = 0, one row per (i in F(b), j in G(a))
        for (int i = 0; i < F->dim(b); ++i)
            for (int j = 0; j < G->dim(a); ++j) {
                int row = r0 + i * G->dim(a) + j;
                for (int l = 0; l < F->dim(a); ++l)
                    A.at(row, off[a] + l * G->dim(a) + j) =
                        gf::add(A(row, off[a] + l * G->dim(a) + j), Fm(i, l), p);
                for (int l = 0; l < G->dim(b); ++l)
                    A.at(row, off[b] + i * G->dim(b) + l) =
                        gf::sub(A(row, off[b] + i * G->dim(b) + l), Gm(l, j), p);
            }
        r0 += F->dim(b) * G->dim(a);
    }
    Matrix K = kernel_basis(A);
    std::vector<NaturalTransformation> basis;
    for (int c = 0; c < K.cols(); ++c) {
        std::vector<Matrix> comps;
        for (int x = 0; x < P.size(); ++x) {
            Matrix m(F->dim(x), G->dim(x), p);
            for (int i = 0; i < F->dim(x); ++i)
                for (int j = 0; j < G->dim(x); ++j) m.at(i, j) = K(off[x] + i * G->dim(x) + j, c);
            comps.push_back(std::move(m));
        }
        basis.push_back(make_nt(G, F, std::move(comps)));
    }
    return basis;
}

std::optional<NaturalTransformation> find_natural_iso(const ModulePtr& G, const ModulePtr& F,
                                                      uint64_t seed) {
    if (G->poset != F->poset || G->p != F->p) return std::nullopt;
    for (int x = 0; x < G->poset->size(); ++x)
        if (G->dim(x) != F->dim(x)) return std::nullopt;
    auto basis = nt_space_basis(G, F);
    if (basis.empty()) return G->is_zero() ? std::optional(zero_nt(G, F)) : std::nullopt;
    const uint32_t p = G->p;
    const int n = G->poset->size();
    const int nb = static_cast<int>(basis.size());
    int full_rank = 0;
    for (int x = 0; x < n; ++x) full_rank += G->dim(x);

    auto assemble = [&](const std::vector<uint32_t>& coef) {
        std::vector<Matrix> comps;
        for (int x = 0; x < n; ++x) {
            Matrix m(F->dim(x), G->dim(x), p);
            for (int i = 0; i < nb; ++i)
                if (coef[i]) m = m + basis[i].components[x].scaled(coef[i]);
            comps.push_back(std::move(m));
        }
        return comps;
    };
    auto rank_sum = [&](const std::vector<Matrix>& comps) {
        int s = 0;
        for (const auto& m : comps) s += rank(m);
        return s;
    };

    // Random elements of the transformation space hit an isomorphism rarely
    // when many non-isomorphic summands are involved, so climb the total
    // pointwise rank by coordinate descent over basis coefficients, with
    // random restarts.
    std::mt19937_64 rng(seed);
    for (int restart = 0; restart < 60; ++restart) {
        std::vector<uint32_t> coef(nb);
        for (auto& c : coef) c = static_cast<uint32_t>(rng() % p);
        std::vector<Matrix> comps = assemble(coef);
        int best = rank_sum(comps);
        bool improved = true;
        while (best < full_rank && improved) {
            improved = false;
            for (int i = 0; i < nb && best < full_rank; ++i) {
                for (uint32_t c = 0; c < p; ++c) {
                    if (c == coef[i]) continue;
                    uint32_t delta = gf::sub(c, coef[i], p);
                    std::vector<Matrix> cand;
                    cand.reserve(n);
                    for (int x = 0; x < n; ++x)
                        cand.push_back(comps[x] + basis[i].components[x].scaled(delta));
                    int s = rank_sum(cand);
                    if (s > best) {
                        best = s;
                        coef[i] = c;
                        comps = std::move(cand);
                        improved = true;
                        break;
                    }
                }
            }
        }
        if (best == full_rank) {
            bool iso = true;
            for (const auto& m : comps)
                if (m.rows() != m.cols() || !inverse(m)) {
                    iso = false;
                    break;
                }
            if (iso) return make_nt(G, F, std::move(comps));
        }
    }
    return std::nullopt;
}

} // namespace pcalc
