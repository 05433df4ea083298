#include "pcalc/exactness.hpp"

#include <algorithm>
#include <cassert>

namespace pcalc {

SquareReport middle_exact_square(const ModulePtr& F, int x, int y) {
    const FinitePoset& P = *F->poset;
    int m = P.meet(x, y), j = P.join(x, y);
    if (m < 0 || j < 0) throw PosetUnsupported("pair has no meet or join");
    const Matrix alpha = F->map(m, x), f = F->map(m, y);
    const Matrix g = F->map(x, j), beta = F->map(y, j);

    SquareReport r;
    r.meet = m;
    r.x = x;
    r.y = y;
    r.join = j;
    Matrix left = Matrix::vstack(alpha, f);
    Matrix right = Matrix::hstack(g, -beta);
    r.left_rank = rank(left);
    r.right_kernel_dim = g.cols() + beta.cols() - rank(right);
    r.is_middle_exact = (r.right_kernel_dim == r.left_rank);

    // pushout of the span and its comparison into F(x v y)
    auto po = cokernel(Matrix::vstack(alpha, -f));
    auto ct = solve(po.Q.transpose(), Matrix::hstack(g, beta).transpose());
    assert(ct);
    Matrix comp_po = ct->transpose();
    bool po_mono = rank(comp_po) == comp_po.cols();
    r.is_pushout = po_mono && comp_po.rows() == comp_po.cols();

    // pullback of the cospan and the comparison out of F(x ^ y)
    Matrix pb = kernel_basis(right);
    auto comp_pb = solve(pb, left);
    assert(comp_pb);
    bool pb_epi = rank(*comp_pb) == comp_pb->rows();
    r.is_pullback = pb_epi && comp_pb->rows() == comp_pb->cols();

    // the three formulations are equivalent; disagreement is a bug
    if (po_mono != r.is_middle_exact || pb_epi != r.is_middle_exact)
        throw ValidationError("middle-exactness formulations disagree at (" + P.name(x) + ", " +
                              P.name(y) + ")");
    return r;
}

PairCheck is_2_middle_exact(const ModulePtr& F) {
    const FinitePoset& P = *F->poset;
    for (int x = 0; x < P.size(); ++x)
        for (int y = x + 1; y < P.size(); ++y) {
            if (P.leq(x, y) || P.leq(y, x)) continue;
            if (P.meet(x, y) < 0 || P.join(x, y) < 0)
                throw PosetUnsupported("2-middle-exactness needs a lattice");
            if (!middle_exact_square(F, x, y).is_middle_exact) return {false, std::pair{x, y}};
        }
    return {};
}

ChainComplex koszul(const ModulePtr& F, const CubeDiagram& cube) {
    const int k = cube.k;
    const uint32_t p = F->p;
    const int full = (1 << k) - 1;
    // degree i holds the subsets with popcount k - i, in ascending bitmask order
    std::vector<std::vector<int>> basis(k + 1);
    for (int S = 0; S <= full; ++S)
        basis[k - __builtin_popcount(static_cast<unsigned>(S))].push_back(S);
    auto deg_dim = [&](int i) {
        int d = 0;
        for (int S : basis[i]) d += F->dim(cube.assignment[S]);
        return d;
    };
    std::vector<int> dims(k + 1);
    for (int i = 0; i <= k; ++i) dims[i] = deg_dim(i);

    std::vector<Matrix> diffs;
    diffs.push_back(Matrix(0, dims[0], p));
    for (int i = 1; i <= k; ++i) {
        Matrix d(dims[i - 1], dims[i], p);
        int c0 = 0;
        for (int S : basis[i]) {
            int scols = F->dim(cube.assignment[S]);
            // complement elements t_0 < ... in ascending order; adding t_j
            // carries sign (-1)^j
            int sign_idx = 0;
            for (int t = 0; t < k; ++t) {
                if (S & (1 << t)) continue;
                int T = S | (1 << t);
                int r0 = 0;
                for (int U : basis[i - 1]) {
                    if (U == T) break;
                    r0 += F->dim(cube.assignment[U]);
                }
                Matrix blk = F->map(cube.assignment[S], cube.assignment[T]);
                if (sign_idx % 2) blk = -blk;
                for (int r = 0; r < blk.rows(); ++r)
                    for (int c = 0; c < scols; ++c)
                        d.at(r0 + r, c0 + c) = gf::add(d(r0 + r, c0 + c), blk(r, c), p);
                ++sign_idx;
            }
            c0 += scols;
        }
        diffs.push_back(std::move(d));
    }
    return make_complex(p, 0, std::move(dims), std::move(diffs));
}

std::vector<int> koszul_homology(const ChainComplex& C) {
    std::vector<int> h;
    for (int i = C.lo; i <= C.hi(); ++i) h.push_back(homology(C, i));
    return h;
}

DegreeCheck is_k_middle_exact(const ModulePtr& F, int k, CubeMode mode, bool include_degenerate,
                              long long cost_cap) {
    auto middle_exact_on = [&](const CubeDiagram& cube) {
        ChainComplex K = koszul(F, cube);
        for (int i = 1; i < cube.k; ++i)
            if (homology(K, i) != 0) return false;
        return true;
    };
    for (const auto& cube : enumerate_cubes(*F->poset, k, mode, cost_cap))
        if (!middle_exact_on(cube)) return {false, cube};
    if (include_degenerate && mode == CubeMode::full) {
        // a degenerate k-cube is a smaller nondegenerate cover padded with
        // copies of the top element
        for (int v = 0; v < F->poset->size(); ++v) {
            CubeDiagram cube = cube_from_cover(*F->poset, v, std::vector<int>(k, v));
            if (!middle_exact_on(cube)) return {false, cube};
        }
        for (int j = 1; j < k; ++j)
            for (const auto& small : enumerate_cubes(*F->poset, j, mode, cost_cap)) {
                std::vector<int> xs = small.cover_elements;
                xs.resize(k, small.v);
                CubeDiagram cube = cube_from_cover(*F->poset, small.v, xs);
                if (!middle_exact_on(cube)) return {false, cube};
            }
    }
    return {};
}

} // namespace pcalc
