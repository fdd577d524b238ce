#pragma once

#include "schatten/matrix.hpp"
#include "schatten/walk_weights.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace schatten {

/**
 * Fixed sampling pattern on d nodes: undirected edges, loops allowed.
 * Under graph sampling the pattern is relabeled by a uniform random
 * permutation and the matrix entries on its edges are observed.
 */
struct PatternGraph {
    int d = 0;
    std::vector<std::pair<int, int>> edges; // u <= v, unique

    void add_edge(int u, int v);
    std::size_t edge_count() const { return edges.size(); }
    bool has_loops() const;

    /// 0/1 adjacency (with unit diagonal entries where the pattern has loops).
    SymmetricMatrix adjacency() const;
};

/// All pairs within {0..l-1}; loops on those nodes if `with_loops`.
PatternGraph clique_pattern(int d, int l, bool with_loops = false);
/// All pairs (i, j) with min(i, j) < l; loops on {0..l-1} if `with_loops`.
PatternGraph clique_star_pattern(int d, int l, bool with_loops = false);
/// Every pair including all loops: full observation.
PatternGraph complete_pattern_with_loops(int d);

struct SamplingModel {
    struct ErdosRenyi { double p = 1.0; };
    struct Graph { PatternGraph pattern; };

    std::variant<ErdosRenyi, Graph> model;

    static SamplingModel erdos_renyi(double p);
    static SamplingModel graph(PatternGraph pattern);

    bool is_er() const { return std::holds_alternative<ErdosRenyi>(model); }
    double er_probability() const { return std::get<ErdosRenyi>(model).p; }
    const PatternGraph& pattern() const { return std::get<Graph>(model).pattern; }
};

/// Keeps each pair i <= j (diagonal included) independently with probability p.
SampledMatrix sample_er(const SymmetricMatrix& m, double p, std::uint64_t seed);

/// Observes M on the edges of G relabeled by a uniform random permutation.
SampledMatrix sample_graph(const SymmetricMatrix& m, const PatternGraph& g, std::uint64_t seed);

/// Deterministic variant: entry (i,j) observed iff (perm[i], perm[j]) is an edge of G.
SampledMatrix sample_graph_with_permutation(const SymmetricMatrix& m, const PatternGraph& g,
                                            const std::vector<int>& perm);

/**
 * Observation probability p(H) per pattern, keyed like the k-walk catalog.
 * Entries with p(H) == 0 are kept (flagged), not dropped: the consumer
 * decides how to treat patterns the model can never realize.
 */
struct DebiasTable {
    int k = 0;
    std::map<std::string, double> probs;

    double at(const std::string& key) const;
    std::vector<std::string> zero_keys() const;
};

/// Erdos-Renyi: p(H) = p^m(H).
DebiasTable debias_er(int k, double p);

/**
 * Graph sampling: p(H) is the ratio of the H-walk weight of the pattern
 * adjacency to that of the all-ones matrix (loop included), i.e. the
 * fraction of labelled H-placements the pattern realizes.
 */
DebiasTable debias_graph(int k, const PatternGraph& g,
                         std::uint64_t walk_cap = 500'000'000ULL);

/// Dispatch on the model (d is required for the ER case only as a check).
DebiasTable debias_for(const SamplingModel& model, int k);

} // namespace schatten
