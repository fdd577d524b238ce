#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace schatten {

/**
 * Canonical multigraph with loops on at most k vertices: the pattern of a
 * closed k-walk. Vertices are labelled 0..num_vertices-1 and the edge
 * multiset is the lexicographically smallest one over all relabelings, so
 * equal patterns compare equal and `key()` is unique per isomorphism class.
 */
class Pseudograph {
public:
    struct Edge {
        int u, v;  // u <= v; u == v encodes a self-loop
        int mult;  // >= 1
        auto operator<=>(const Edge&) const = default;
    };

    /// Builds the canonical form of the multigraph given by `edges` (any labels 0..n-1).
    static Pseudograph canonical(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return num_vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Total edge multiplicity: the walk length k realizing this pattern.
    int walk_length() const;
    /// Number of distinct edges including loops, m(H).
    int distinct_edges() const { return static_cast<int>(edges_.size()); }
    /// Number of distinct self-loops.
    int loop_count() const;

    /// Stable text form, e.g. "v2:0-0x1,0-1x2"; used as the canonical key.
    std::string key() const;

    auto operator<=>(const Pseudograph&) const = default;

private:
    int num_vertices_ = 0;
    std::vector<Edge> edges_; // sorted by (u, v)
};

/**
 * Pattern of a closed walk. `walk` is the full sequence w_1..w_{k+1} with
 * w_1 == w_{k+1}; vertex labels are arbitrary non-negative ints. Relabeled
 * walks map to equal canonical keys.
 */
Pseudograph canonicalize_walk(std::span<const int> walk);

/**
 * Number of closed k-walk sequences on a fixed labelled copy of H that
 * traverse each multiedge exactly its multiplicity (start point and
 * direction both count): the weight multiplicity c(H).
 */
std::int64_t multiplicity(const Pseudograph& h);

struct CatalogEntry {
    Pseudograph graph;
    std::int64_t c = 0; // walk multiplicity c(H)
    int m = 0;          // distinct edges incl. loops
    int loops = 0;      // distinct self-loops
};

/**
 * All k-cyclic pseudographs: one entry per isomorphism class of closed
 * k-walk patterns, in a stable order (num_vertices, then m, then key).
 * Built by exhaustive enumeration of normalized closed k-walks; results
 * for k <= 7 are cached after the first call ({3,7,12,32,69} classes for
 * k = 3..7).
 */
const std::vector<CatalogEntry>& enumerate_catalog(int k);

} // namespace schatten
