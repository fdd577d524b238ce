#include "schatten/pseudograph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace schatten {
namespace {

// Accumulates multiplicities of parallel edges and sorts.
std::vector<Pseudograph::Edge> normalize_edges(std::vector<Pseudograph::Edge> edges) {
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.mult < 1) throw std::invalid_argument("Pseudograph: multiplicity must be >= 1");
    }
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    std::vector<Pseudograph::Edge> merged;
    for (const auto& e : edges) {
        if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v)
            merged.back().mult += e.mult;
        else
            merged.push_back(e);
    }
    return merged;
}

std::vector<Pseudograph::Edge> relabel_edges(const std::vector<Pseudograph::Edge>& edges,
                                             const std::vector<int>& perm) {
    std::vector<Pseudograph::Edge> out;
    out.reserve(edges.size());
    for (const auto& e : edges) {
        int u = perm[e.u], v = perm[e.v];
        if (u > v) std::swap(u, v);
        out.push_back({u, v, e.mult});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    return out;
}

bool edges_connected(int num_vertices, const std::vector<Pseudograph::Edge>& edges) {
    if (num_vertices <= 1) return true;
    std::vector<int> parent(num_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges) parent[find(e.u)] = find(e.v);
    const int root = find(0);
    for (int v = 1; v < num_vertices; ++v)
        if (find(v) != root) return false;
    return true;
}

} // namespace

Pseudograph Pseudograph::canonical(int num_vertices, std::vector<Edge> edges) {
    if (num_vertices < 1) throw std::invalid_argument("Pseudograph: need at least one vertex");
    edges = normalize_edges(std::move(edges));
    for (const auto& e : edges)
        if (e.v >= num_vertices) throw std::invalid_argument("Pseudograph: vertex label out of range");
    if (!edges_connected(num_vertices, edges))
        throw std::invalid_argument("Pseudograph: pattern must be connected");

    std::vector<int> perm(num_vertices);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Edge> best = relabel_edges(edges, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<Edge> candidate = relabel_edges(edges, perm);
        if (candidate < best) best = std::move(candidate);
    }

    Pseudograph out;
    out.num_vertices_ = num_vertices;
    out.edges_ = std::move(best);
    return out;
}

int Pseudograph::walk_length() const {
    int k = 0;
    for (const auto& e : edges_) k += e.mult;
    return k;
}

int Pseudograph::loop_count() const {
    int n = 0;
    for (const auto& e : edges_) n += e.u == e.v;
    return n;
}

std::string Pseudograph::key() const {
    std::string s = "v" + std::to_string(num_vertices_) + ":";
    for (std::size_t n = 0; n < edges_.size(); ++n) {
        if (n) s += ',';
        s += std::to_string(edges_[n].u) + "-" + std::to_string(edges_[n].v) + "x" +
             std::to_string(edges_[n].mult);
    }
    return s;
}

Pseudograph canonicalize_walk(std::span<const int> walk) {
    if (walk.size() < 2) throw std::invalid_argument("canonicalize_walk: walk too short");
    if (walk.front() != walk.back())
        throw std::invalid_argument("canonicalize_walk: walk must be closed (w_1 == w_{k+1})");

    // First-occurrence relabeling makes the result independent of labels.
    std::vector<int> order;
    auto local = [&](int v) {
        for (std::size_t n = 0; n < order.size(); ++n)
            if (order[n] == v) return static_cast<int>(n);
        order.push_back(v);
        return static_cast<int>(order.size() - 1);
    };

    const std::size_t k = walk.size() - 1;
    std::vector<Pseudograph::Edge> edges;
    edges.reserve(k);
    int prev = local(walk[0]);
    for (std::size_t n = 1; n <= k; ++n) {
        const int cur = local(walk[n]);
        edges.push_back({prev, cur, 1});
        prev = cur;
    }
    return Pseudograph::canonical(static_cast<int>(order.size()), std::move(edges));
}

namespace {

// DFS over the edge multiset: counts walk sequences using every multiedge
// exactly its multiplicity, from a fixed start.
std::int64_t count_eulerian_walks(const Pseudograph& h,
                                  std::vector<std::vector<int>>& remaining, int start, int at,
                                  int left) {
    if (left == 0) return at == start ? 1 : 0;
    std::int64_t total = 0;
    const int n = h.num_vertices();
    for (int next = 0; next < n; ++next) {
        int& r = remaining[std::min(at, next)][std::max(at, next)];
        if (r == 0) continue;
        --r;
        total += count_eulerian_walks(h, remaining, start, next, left - 1);
        ++r;
    }
    return total;
}

} // namespace

std::int64_t multiplicity(const Pseudograph& h) {
    const int n = h.num_vertices();
    std::vector<std::vector<int>> remaining(n, std::vector<int>(n, 0));
    for (const auto& e : h.edges()) remaining[e.u][e.v] = e.mult;
    std::int64_t total = 0;
    const int k = h.walk_length();
    for (int start = 0; start < n; ++start) {
        auto scratch = remaining;
        total += count_eulerian_walks(h, scratch, start, start, k);
    }
    if (total == 0)
        throw std::invalid_argument("multiplicity: pattern is not realizable as a closed walk");
    return total;
}

namespace {

// Enumerates normalized closed k-walks: w_1 = 0 and every new vertex gets
// the next unused label. Every walk is relabel-equivalent to exactly one
// normalized walk, so this visits each isomorphism class.
void enumerate_normalized_walks(int k, std::vector<int>& walk, int used,
                                std::map<Pseudograph, std::int64_t>& classes) {
    const int depth = static_cast<int>(walk.size());
    if (depth == k) {
        walk.push_back(walk.front());
        Pseudograph h = canonicalize_walk(walk);
        walk.pop_back();
        classes.emplace(std::move(h), 0);
        return;
    }
    for (int v = 0; v <= used && v < k; ++v) {
        walk.push_back(v);
        enumerate_normalized_walks(k, walk, std::max(used, v + 1), classes);
        walk.pop_back();
    }
}

std::vector<CatalogEntry> build_catalog(int k) {
    if (k < 1) throw std::invalid_argument("enumerate_catalog: k must be >= 1");
    std::map<Pseudograph, std::int64_t> classes;
    std::vector<int> walk{0};
    enumerate_normalized_walks(k, walk, 1, classes);

    std::vector<CatalogEntry> catalog;
    catalog.reserve(classes.size());
    for (const auto& [graph, unused] : classes) {
        CatalogEntry entry;
        entry.graph = graph;
        entry.c = multiplicity(graph);
        entry.m = graph.distinct_edges();
        entry.loops = graph.loop_count();
        catalog.push_back(std::move(entry));
    }
    std::sort(catalog.begin(), catalog.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        const auto ka = std::tuple(a.graph.num_vertices(), a.m, a.graph.key());
        const auto kb = std::tuple(b.graph.num_vertices(), b.m, b.graph.key());
        return ka < kb;
    });
    return catalog;
}

} // namespace

const std::vector<CatalogEntry>& enumerate_catalog(int k) {
    static std::mutex mutex;
    static std::map<int, std::vector<CatalogEntry>> cache;
    std::scoped_lock lock(mutex);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, build_catalog(k)).first;
    return it->second;
}

} // namespace schatten
