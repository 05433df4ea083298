#include "pcalc/poset.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <sstream>

namespace pcalc {

namespace {

std::string coord_name(const std::vector<int>& c) {
    std::ostringstream os;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    return os.str();
}

} // namespace

std::shared_ptr<const FinitePoset> FinitePoset::grid(const std::vector<int>& shape) {
    if (shape.empty()) throw ValidationError("grid shape must be nonempty");
    long long total = 1;
    for (int m : shape) {
        if (m < 1) throw ValidationError("grid chain lengths must be >= 1");
        total *= m;
        if (total > 100000) throw ValidationError("grid too large");
    }
    auto P = std::shared_ptr<FinitePoset>(new FinitePoset());
    P->shape_ = shape;
    // lexicographic enumeration of coordinate tuples
    std::vector<int> c(shape.size(), 0);
    for (long long i = 0; i < total; ++i) {
        P->coords_.push_back(c);
        P->names_.push_back(coord_name(c));
        for (int d = static_cast<int>(shape.size()) - 1; d >= 0; --d) {
            if (++c[d] < shape[d]) break;
            c[d] = 0;
        }
    }
    const int n = static_cast<int>(total);
    for (int i = 0; i < n; ++i)
        for (size_t d = 0; d < shape.size(); ++d)
            if (P->coords_[i][d] + 1 < shape[d]) {
                std::vector<int> up = P->coords_[i];
                ++up[d];
                P->hasse_.emplace_back(i, P->grid_index(up));
            }
    P->finalize();
    return P;
}

std::shared_ptr<const FinitePoset> FinitePoset::explicit_poset(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
    if (elements.empty()) throw ValidationError("poset must be nonempty");
    auto P = std::shared_ptr<FinitePoset>(new FinitePoset());
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw ValidationError("duplicate poset elements");
    P->names_ = std::move(elements);
    for (const auto& [lo, hi] : covers) {
        int a = P->index_of(lo), b = P->index_of(hi);
        if (a == b) throw ValidationError("reflexive cover pair " + lo);
        P->hasse_.emplace_back(a, b);
    }
    std::sort(P->hasse_.begin(), P->hasse_.end());
    if (std::adjacent_find(P->hasse_.begin(), P->hasse_.end()) != P->hasse_.end())
        throw ValidationError("duplicate cover pair");
    P->finalize();
    // covers must be transitively reduced: no cover pair may be reachable
    // through an intermediate element
    for (const auto& [a, b] : P->hasse_)
        for (int z = 0; z < P->size(); ++z)
            if (z != a && z != b && P->leq(a, z) && P->leq(z, b))
                throw ValidationError("cover pair " + P->name(a) + " -> " + P->name(b) +
                                      " is not a cover (path through " + P->name(z) + ")");
    return P;
}

int FinitePoset::index_of(const std::string& id) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), id);
    if (it == names_.end() || *it != id) {
        // grids are enumerated lexicographically by coordinates, not by name;
        // fall back to a linear scan
        for (int i = 0; i < size(); ++i)
            if (names_[i] == id) return i;
        throw ValidationError("unknown poset element '" + id + "'");
    }
    return static_cast<int>(it - names_.begin());
}

int FinitePoset::grid_index(const std::vector<int>& c) const {
    assert(is_grid() && c.size() == shape_.size());
    long long idx = 0;
    for (size_t d = 0; d < shape_.size(); ++d) {
        assert(c[d] >= 0 && c[d] < shape_[d]);
        idx = idx * shape_[d] + c[d];
    }
    return static_cast<int>(idx);
}

void FinitePoset::finalize() {
    const int n = size();
    parents_.assign(n, {});
    children_.assign(n, {});
    for (const auto& [a, b] : hasse_) {
        parents_[b].push_back(a);
        children_[a].push_back(b);
    }
    for (auto& v : parents_) std::sort(v.begin(), v.end());
    for (auto& v : children_) std::sort(v.begin(), v.end());

    // topological order (Kahn, min-index first); also detects cycles
    std::vector<int> indeg(n);
    for (int i = 0; i < n; ++i) indeg[i] = static_cast<int>(parents_[i].size());
    std::priority_queue<int, std::vector<int>, std::greater<>> q;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) q.push(i);
    topo_.clear();
    while (!q.empty()) {
        int x = q.top();
        q.pop();
        topo_.push_back(x);
        for (int y : children_[x])
            if (--indeg[y] == 0) q.push(y);
    }
    if (static_cast<int>(topo_.size()) != n) throw ValidationError("cover relation has a cycle");

    // reachability closure
    leq_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) leq_[i][i] = 1;
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
        int x = *it;
        for (int y : children_[x])
            for (int z = 0; z < n; ++z)
                if (leq_[y][z]) leq_[x][z] = 1;
    }

    // join/meet tables by bound scans
    join_.assign(static_cast<size_t>(n) * n, -1);
    meet_.assign(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            int j = -1, m = -1;
            for (int c = 0; c < n; ++c) {
                if (leq_[a][c] && leq_[b][c] && (j < 0 || leq_[c][j])) j = c;
                if (leq_[c][a] && leq_[c][b] && (m < 0 || leq_[m][c])) m = c;
            }
            // the candidate must actually be a least upper / greatest lower bound
            if (j >= 0)
                for (int c = 0; c < n; ++c)
                    if (leq_[a][c] && leq_[b][c] && !leq_[j][c]) {
                        j = -1;
                        break;
                    }
            if (m >= 0)
                for (int c = 0; c < n; ++c)
                    if (leq_[c][a] && leq_[c][b] && !leq_[c][m]) {
                        m = -1;
                        break;
                    }
            join_[static_cast<size_t>(a) * n + b] = join_[static_cast<size_t>(b) * n + a] = j;
            meet_[static_cast<size_t>(a) * n + b] = meet_[static_cast<size_t>(b) * n + a] = m;
        }
}

bool FinitePoset::covers(int lo, int hi) const {
    return std::binary_search(parents_[hi].begin(), parents_[hi].end(), lo);
}

int FinitePoset::join_all(const std::vector<int>& xs) const {
    if (xs.empty()) return bottom().value_or(-1);
    int acc = xs[0];
    for (size_t i = 1; i < xs.size() && acc >= 0; ++i) acc = join(acc, xs[i]);
    return acc;
}

int FinitePoset::meet_all(const std::vector<int>& xs) const {
    if (xs.empty()) return top().value_or(-1);
    int acc = xs[0];
    for (size_t i = 1; i < xs.size() && acc >= 0; ++i) acc = meet(acc, xs[i]);
    return acc;
}

std::optional<int> FinitePoset::bottom() const {
    for (int i = 0; i < size(); ++i) {
        bool below_all = true;
        for (int j = 0; j < size() && below_all; ++j) below_all = leq_[i][j];
        if (below_all) return i;
    }
    return std::nullopt;
}

std::optional<int> FinitePoset::top() const {
    for (int i = 0; i < size(); ++i) {
        bool above_all = true;
        for (int j = 0; j < size() && above_all; ++j) above_all = leq_[j][i];
        if (above_all) return i;
    }
    return std::nullopt;
}

std::vector<int> FinitePoset::down_set(int x) const {
    std::vector<int> r;
    for (int y = 0; y < size(); ++y)
        if (leq_[y][x]) r.push_back(y);
    return r;
}

std::vector<int> FinitePoset::up_set(int x) const {
    std::vector<int> r;
    for (int y = 0; y < size(); ++y)
        if (leq_[x][y]) r.push_back(y);
    return r;
}

std::shared_ptr<const FinitePoset> FinitePoset::opposite() const {
    auto P = std::shared_ptr<FinitePoset>(new FinitePoset());
    P->names_ = names_;
    for (const auto& [a, b] : hasse_) P->hasse_.emplace_back(b, a);
    std::sort(P->hasse_.begin(), P->hasse_.end());
    P->finalize();
    return P;
}

namespace {

// Reduced indecomposable join-decomposition of v in a finite distributive
// lattice: the maximal join-irreducibles below v. Returns its size; -1 when
// the decomposition fails to reassemble v (impossible in valid inputs).
int jdim_by_decomposition(const FinitePoset& P, int v, const std::vector<int>& join_irr,
                          int bottom) {
    if (v == bottom) return 0;
    std::vector<int> below;
    for (int j : join_irr)
        if (P.leq(j, v)) below.push_back(j);
    std::vector<int> maximal;
    for (int j : below) {
        bool is_max = true;
        for (int j2 : below)
            if (j2 != j && P.leq(j, j2)) {
                is_max = false;
                break;
            }
        if (is_max) maximal.push_back(j);
    }
    if (P.join_all(maximal) != v) return -1;
    // reducedness: no member is redundant
    for (size_t i = 0; i < maximal.size(); ++i) {
        std::vector<int> rest;
        for (size_t l = 0; l < maximal.size(); ++l)
            if (l != i) rest.push_back(maximal[l]);
        if (!rest.empty() && P.join_all(rest) == v) return -1;
    }
    return static_cast<int>(maximal.size());
}

} // namespace

LatticeProfile analyze_lattice(const FinitePoset& P) {
    const int n = P.size();
    LatticeProfile prof;
    prof.is_lattice = true;
    for (int a = 0; a < n && prof.is_lattice; ++a)
        for (int b = 0; b < n; ++b)
            if (P.join(a, b) < 0 || P.meet(a, b) < 0) {
                prof.is_lattice = false;
                prof.no_join_witness = {a, b};
                break;
            }
    prof.bottom = P.bottom();
    prof.top = P.top();

    if (prof.is_lattice) {
        prof.is_distributive = true;
        for (int x = 0; x < n && prof.is_distributive; ++x)
            for (int y = 0; y < n && prof.is_distributive; ++y)
                for (int z = 0; z < n; ++z)
                    if (P.meet(x, P.join(y, z)) != P.join(P.meet(x, y), P.meet(x, z))) {
                        prof.is_distributive = false;
                        prof.distributivity_witness = {{x, y, z}};
                        break;
                    }
    }

    // join-irreducibles by definition: v != x v y for all x,y < v, v not bottom
    for (int v = 0; v < n; ++v) {
        if (prof.bottom && v == *prof.bottom) continue;
        bool irr = true;
        for (int x = 0; x < n && irr; ++x)
            for (int y = x; y < n; ++y)
                if (x != v && y != v && P.leq(x, v) && P.leq(y, v) && P.join(x, y) == v) {
                    irr = false;
                    break;
                }
        if (irr) prof.join_irreducibles.push_back(v);
    }
    for (int v = 0; v < n; ++v) {
        if (prof.top && v == *prof.top) continue;
        bool irr = true;
        for (int x = 0; x < n && irr; ++x)
            for (int y = x; y < n; ++y)
                if (x != v && y != v && P.leq(v, x) && P.leq(v, y) && P.meet(x, y) == v) {
                    irr = false;
                    break;
                }
        if (irr) prof.meet_irreducibles.push_back(v);
    }

    prof.jdim.assign(n, -1);
    prof.mdim.assign(n, -1);
    if (prof.is_distributive && prof.bottom) {
        for (int v = 0; v < n; ++v) {
            int by_parents = static_cast<int>(P.parents(v).size());
            int by_decomp = jdim_by_decomposition(P, v, prof.join_irreducibles, *prof.bottom);
            if (by_parents != by_decomp)
                throw ValidationError("join-dimension cross-check failed at " + P.name(v));
            prof.jdim[v] = by_parents;
        }
    }
    if (prof.is_distributive && prof.top) {
        auto op = P.opposite();
        for (int v = 0; v < n; ++v) {
            int by_children = static_cast<int>(P.children(v).size());
            int by_decomp = jdim_by_decomposition(*op, v, prof.meet_irreducibles, *prof.top);
            if (by_children != by_decomp)
                throw ValidationError("meet-dimension cross-check failed at " + P.name(v));
            prof.mdim[v] = by_children;
        }
    }
    return prof;
}

Stratum stratum(const FinitePoset& P, int n, StratumSide side) {
    LatticeProfile prof = analyze_lattice(P);
    if (!prof.is_distributive) throw NotDistributive("stratum requires a distributive lattice");
    Stratum s;
    if (side == StratumSide::join) {
        if (!prof.bottom) throw NotDistributive("join stratum requires a bottom element");
        for (int v = 0; v < P.size(); ++v)
            if (prof.jdim[v] <= n) s.elements.push_back(v);
    } else {
        if (!prof.top) throw NotDistributive("meet stratum requires a top element");
        for (int v = 0; v < P.size(); ++v)
            if (prof.mdim[v] <= n) s.elements.push_back(v);
    }
    s.closed = true;
    for (int v : s.elements)
        for (int y = 0; y < P.size(); ++y) {
            bool related = side == StratumSide::join ? P.leq(y, v) : P.leq(v, y);
            if (related && !std::binary_search(s.elements.begin(), s.elements.end(), y))
                s.closed = false;
        }
    return s;
}

CubeDiagram cube_from_cover(const FinitePoset& P, int v, const std::vector<int>& xs) {
    const int k = static_cast<int>(xs.size());
    if (k == 0) throw NotAPairwiseCover("empty cover");
    for (int x : xs)
        if (!P.leq(x, v))
            throw NotAPairwiseCover("cover element " + P.name(x) + " is not below " + P.name(v));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (P.join(xs[i], xs[j]) != v)
                throw NotAPairwiseCover("join of " + P.name(xs[i]) + " and " + P.name(xs[j]) +
                                        " is not " + P.name(v));
    CubeDiagram c;
    c.k = k;
    c.v = v;
    c.cover_elements = xs;
    c.assignment.assign(1u << k, -1);
    const unsigned full = (1u << k) - 1;
    for (unsigned S = 0; S <= full; ++S) {
        if (S == full) {
            c.assignment[S] = v;
            continue;
        }
        std::vector<int> outside;
        for (int i = 0; i < k; ++i)
            if (!(S & (1u << i))) outside.push_back(xs[i]);
        int m = P.meet_all(outside);
        if (m < 0) throw NotAPairwiseCover("cover meets do not exist");
        c.assignment[S] = m;
    }
    return c;
}

std::vector<CubeDiagram> enumerate_cubes(const FinitePoset& P, int k, CubeMode mode,
                                         long long cost_cap) {
    std::vector<CubeDiagram> out;
    if (k < 1) return out;
    if (mode == CubeMode::parents_only) {
        LatticeProfile prof = analyze_lattice(P);
        if (!prof.is_distributive) throw NotDistributive("cube enumeration requires distributivity");
        for (int v = 0; v < P.size(); ++v)
            if (static_cast<int>(P.parents(v).size()) == k)
                out.push_back(cube_from_cover(P, v, P.parents(v)));
        return out;
    }
    long long budget = cost_cap;
    for (int v = 0; v < P.size(); ++v) {
        std::vector<int> below;
        for (int x = 0; x < P.size(); ++x)
            if (x != v && P.leq(x, v)) below.push_back(x);
        std::vector<int> chosen;
        // depth-first over increasing element indices; every extension keeps
        // all pairwise joins equal to v
        auto extend = [&](auto&& self, size_t start) -> void {
            if (static_cast<int>(chosen.size()) == k) {
                out.push_back(cube_from_cover(P, v, chosen));
                return;
            }
            for (size_t i = start; i < below.size(); ++i) {
                if (--budget < 0)
                    throw CostCapExceeded(
                        "cube enumeration exceeded the candidate cap; consider parents_only mode");
                int x = below[i];
                bool ok = true;
                for (int y : chosen)
                    if (P.join(x, y) != v) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                chosen.push_back(x);
                self(self, i + 1);
                chosen.pop_back();
            }
        };
        extend(extend, 0);
    }
    return out;
}

} // namespace pcalc
