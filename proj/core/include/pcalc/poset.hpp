#pragma once

#include "pcalc/errors.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pcalc {

// Finite poset with precomputed reachability and join/meet tables.
// Elements are indexed 0..size()-1 in canonical (lexicographic) order of
// their ids; grids use coordinate tuples as ids ("x,y,...").
class FinitePoset {
public:
    // Product of total orders with chain lengths shape[i] (coordinates
    // 0..shape[i]-1).
    static std::shared_ptr<const FinitePoset> grid(const std::vector<int>& shape);

    // Arbitrary finite poset from element ids and cover pairs (lo, hi).
    static std::shared_ptr<const FinitePoset> explicit_poset(
        std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& covers);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    int index_of(const std::string& id) const;

    bool is_grid() const { return !shape_.empty(); }
    const std::vector<int>& shape() const { return shape_; }
    const std::vector<int>& coords(int i) const { return coords_[i]; }
    int grid_index(const std::vector<int>& c) const;

    bool leq(int a, int b) const { return leq_[a][b]; }
    bool covers(int lo, int hi) const;  // lo ≺ hi
    const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }
    const std::vector<int>& parents(int i) const { return parents_[i]; }
    const std::vector<int>& children(int i) const { return children_[i]; }

    // -1 when the bound does not exist.
    int join(int a, int b) const { return join_[static_cast<size_t>(a) * size() + b]; }
    int meet(int a, int b) const { return meet_[static_cast<size_t>(a) * size() + b]; }
    int join_all(const std::vector<int>& xs) const;
    int meet_all(const std::vector<int>& xs) const;

    std::optional<int> bottom() const;
    std::optional<int> top() const;

    // Elements in topological order (all parents precede each element);
    // ties broken by canonical index.
    const std::vector<int>& topo_order() const { return topo_; }

    std::vector<int> down_set(int x) const;  // {y : y <= x}
    std::vector<int> up_set(int x) const;    // {y : y >= x}

    // Opposite poset; element indices are preserved.
    std::shared_ptr<const FinitePoset> opposite() const;

private:
    FinitePoset() = default;
    void finalize();  // builds leq_, join/meet tables, topo order

    std::vector<std::string> names_;
    std::vector<std::vector<int>> coords_;
    std::vector<int> shape_;
    std::vector<std::pair<int, int>> hasse_;
    std::vector<std::vector<int>> parents_, children_;
    std::vector<std::vector<char>> leq_;
    std::vector<int> join_, meet_;
    std::vector<int> topo_;
};

using PosetPtr = std::shared_ptr<const FinitePoset>;

struct LatticeProfile {
    bool is_lattice = false;
    bool is_distributive = false;
    std::optional<int> bottom, top;
    std::vector<int> jdim, mdim;  // per element; -1 when undefined
    std::vector<int> join_irreducibles, meet_irreducibles;
    // witness when not a lattice / not distributive
    std::optional<std::pair<int, int>> no_join_witness;
    std::optional<std::array<int, 3>> distributivity_witness;
};

// Joins/meets for all pairs, distributivity by exhaustive triple test, and
// join/meet-dimensions computed both as parent counts and via reduced
// indecomposable join-decompositions (the two must agree).
LatticeProfile analyze_lattice(const FinitePoset& P);

enum class StratumSide { join, meet };

struct Stratum {
    std::vector<int> elements;
    bool closed;  // down-closed (join side) / up-closed (meet side)
};

Stratum stratum(const FinitePoset& P, int n, StratumSide side);

// (k)-dimensional cube on the pairwise cover x^0..x^{k-1} of v. assignment
// maps each subset of {0..k-1} (as a bitmask) to a poset element;
// assignment(full) = v and assignment(S) = meet of the x^i with i not in S.
struct CubeDiagram {
    int k = 0;
    int v = -1;
    std::vector<int> cover_elements;
    std::vector<int> assignment;  // indexed by bitmask, size 2^k
};

CubeDiagram cube_from_cover(const FinitePoset& P, int v, const std::vector<int>& xs);

enum class CubeMode { full, parents_only };

// Nondegenerate pairwise covers of size k (all x^i < v), unordered. In
// parents_only mode: for each v with jdim(v) = k, the cube on its parents.
// cost_cap bounds the number of candidate covers inspected in full mode.
std::vector<CubeDiagram> enumerate_cubes(const FinitePoset& P, int k, CubeMode mode,
                                         long long cost_cap = 1000000);

} // namespace pcalc
