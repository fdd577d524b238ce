#include "schatten/sampling.hpp"

#include "schatten/rng.hpp"

#include <algorithm>
#include <cmath>

namespace schatten {

void PatternGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= d || v >= d)
        throw std::invalid_argument("PatternGraph: vertex out of range");
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
}

bool PatternGraph::has_loops() const {
    return std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; });
}

SymmetricMatrix PatternGraph::adjacency() const {
    Matrix a = Matrix::Zero(d, d);
    for (const auto& [u, v] : edges) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return SymmetricMatrix::from_upper(a);
}

PatternGraph clique_pattern(int d, int l, bool with_loops) {
    if (l < 1 || l > d) throw std::invalid_argument("clique_pattern: need 1 <= l <= d");
    PatternGraph g;
    g.d = d;
    for (int u = 0; u < l; ++u) {
        if (with_loops) g.add_edge(u, u);
        for (int v = u + 1; v < l; ++v) g.add_edge(u, v);
    }
    return g;
}

PatternGraph clique_star_pattern(int d, int l, bool with_loops) {
    if (l < 1 || l > d) throw std::invalid_argument("clique_star_pattern: need 1 <= l <= d");
    PatternGraph g;
    g.d = d;
    for (int u = 0; u < l; ++u) {
        if (with_loops) g.add_edge(u, u);
        for (int v = u + 1; v < d; ++v) g.add_edge(u, v);
    }
    return g;
}

PatternGraph complete_pattern_with_loops(int d) {
    PatternGraph g;
    g.d = d;
    for (int u = 0; u < d; ++u)
        for (int v = u; v < d; ++v) g.add_edge(u, v);
    return g;
}

SamplingModel SamplingModel::erdos_renyi(double p) {
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("SamplingModel: need 0 < p <= 1");
    return {ErdosRenyi{p}};
}

SamplingModel SamplingModel::graph(PatternGraph pattern) {
    if (pattern.d < 1) throw std::invalid_argument("SamplingModel: empty pattern");
    return {Graph{std::move(pattern)}};
}

SampledMatrix sample_er(const SymmetricMatrix& m, double p, std::uint64_t seed) {
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("sample_er: need 0 < p <= 1");
    Rng rng(seed);
    SampledMatrix s(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i; j < m.dim(); ++j)
            if (rng.bernoulli(p)) s.add(i, j, m(i, j));
    return s;
}

SampledMatrix sample_graph_with_permutation(const SymmetricMatrix& m, const PatternGraph& g,
                                            const std::vector<int>& perm) {
    if (g.d != m.dim())
        throw std::invalid_argument("sample_graph: pattern node count does not match matrix");
    if (static_cast<int>(perm.size()) != g.d)
        throw std::invalid_argument("sample_graph: permutation size mismatch");
    // (i, j) observed iff (perm(i), perm(j)) is an edge: relabel edges by
    // the inverse permutation.
    std::vector<int> inv(perm.size());
    for (std::size_t n = 0; n < perm.size(); ++n) inv[perm[n]] = static_cast<int>(n);
    SampledMatrix s(m.dim());
    for (const auto& [u, v] : g.edges) {
        const int i = inv[u], j = inv[v];
        s.add(i, j, m(std::min(i, j), std::max(i, j)));
    }
    return s;
}

SampledMatrix sample_graph(const SymmetricMatrix& m, const PatternGraph& g, std::uint64_t seed) {
    Rng rng(seed);
    return sample_graph_with_permutation(m, g, random_permutation(m.dim(), rng));
}

double DebiasTable::at(const std::string& key) const {
    auto it = probs.find(key);
    if (it == probs.end()) throw std::out_of_range("DebiasTable: unknown key " + key);
    return it->second;
}

std::vector<std::string> DebiasTable::zero_keys() const {
    std::vector<std::string> out;
    for (const auto& [key, p] : probs)
        if (p == 0.0) out.push_back(key);
    return out;
}

DebiasTable debias_er(int k, double p) {
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("debias_er: need 0 < p <= 1");
    DebiasTable table;
    table.k = k;
    for (const auto& entry : enumerate_catalog(k))
        table.probs.emplace(entry.graph.key(), std::pow(p, entry.m));
    return table;
}

DebiasTable debias_graph(int k, const PatternGraph& g, std::uint64_t walk_cap) {
    if (g.d < k)
        throw std::invalid_argument("debias_graph: pattern must have at least k nodes");
    const SymmetricMatrix adjacency = g.adjacency();
    const SymmetricMatrix all_ones =
        SymmetricMatrix::from_upper(Matrix::Ones(g.d, g.d));

    WalkWeightTable num, den;
    if (k >= 3 && k <= 7) {
        num = gamma_closed_form(adjacency, k);
        den = gamma_closed_form(all_ones, k);
    } else if (k >= 1 && k <= 2) {
        num = detail::gamma_small(adjacency, k);
        den = detail::gamma_small(all_ones, k);
    } else {
        num = gamma_oracle(adjacency, k, walk_cap);
        den = gamma_oracle(all_ones, k, walk_cap);
    }

    DebiasTable table;
    table.k = k;
    for (const auto& [key, total] : den.weights) {
        if (total <= 0.0)
            throw std::runtime_error("debias_graph: degenerate all-ones walk count for " + key);
        // Walk counts are integers; clear tiny negative noise from the
        // closed-form path and clamp to [0, 1].
        double count = num.at(key);
        if (std::abs(count) < 0.5) count = 0.0;
        table.probs.emplace(key, std::min(1.0, std::max(0.0, count / total)));
    }
    return table;
}

DebiasTable debias_for(const SamplingModel& model, int k) {
    if (model.is_er()) return debias_er(k, model.er_probability());
    return debias_graph(k, model.pattern());
}

} // namespace schatten
