#include "schatten/walk_weights.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace schatten {
namespace {

// Neumaier-compensated accumulator: walk counts are huge and the signed
// weights cancel, so naive summation loses the partition identity.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double t = sum + v;
        comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Normalized form of a walk: vertices renamed in first-occurrence order and
// packed 4 bits per step (k <= 16). Two walks share the packed id iff they
// share a pattern, so canonicalization runs once per pattern, not per walk.
std::uint64_t pack_normalized(const int* walk, int k, int* scratch_map, int d) {
    std::fill(scratch_map, scratch_map + d, -1);
    std::uint64_t id = 0;
    int next = 0;
    for (int n = 0; n < k; ++n) {
        int& label = scratch_map[walk[n]];
        if (label < 0) label = next++;
        id = (id << 4) | static_cast<std::uint64_t>(label);
    }
    return id;
}

struct OracleState {
    int k = 0;
    int d = 0;
    const Matrix* m = nullptr;
    std::vector<std::vector<int>> neighbors;
    std::vector<int> walk;
    std::vector<int> label_scratch;
    std::unordered_map<std::uint64_t, std::size_t> bucket_of_pattern;
    std::vector<std::string> bucket_keys;
    std::vector<CompensatedSum> buckets;

    std::size_t bucket_index(std::uint64_t pattern_id) {
        auto it = bucket_of_pattern.find(pattern_id);
        if (it != bucket_of_pattern.end()) return it->second;
        std::vector<int> closed(walk.begin(), walk.begin() + k);
        closed.push_back(walk[0]);
        const std::string key = canonicalize_walk(closed).key();
        const auto found = std::find(bucket_keys.begin(), bucket_keys.end(), key);
        if (found == bucket_keys.end())
            throw std::logic_error("gamma_oracle: walk pattern missing from catalog: " + key);
        const std::size_t index = static_cast<std::size_t>(found - bucket_keys.begin());
        bucket_of_pattern.emplace(pattern_id, index);
        return index;
    }

    void dfs(int depth, double product) {
        const int at = walk[depth - 1];
        if (depth == k) {
            const double closing = (*m)(at, walk[0]);
            if (closing == 0.0) return;
            const std::uint64_t id = pack_normalized(walk.data(), k, label_scratch.data(), d);
            buckets[bucket_index(id)].add(product * closing);
            return;
        }
        for (int next : neighbors[at]) {
            walk[depth] = next;
            dfs(depth + 1, product * (*m)(at, next));
        }
    }
};

WalkWeightTable gamma_oracle_dense(const Matrix& m, int k, std::uint64_t walk_cap) {
    if (k < 1) throw std::invalid_argument("gamma_oracle: k must be >= 1");
    const int d = static_cast<int>(m.rows());

    OracleState state;
    state.k = k;
    state.d = d;
    state.m = &m;
    state.neighbors.resize(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (m(i, j) != 0.0) state.neighbors[i].push_back(j);

    // Walk-count estimate d * Delta^(k-1); refuse rather than hang.
    std::size_t max_degree = 0;
    for (const auto& n : state.neighbors) max_degree = std::max(max_degree, n.size());
    double estimate = static_cast<double>(d);
    for (int n = 0; n < k - 1; ++n) estimate *= static_cast<double>(std::max<std::size_t>(max_degree, 1));
    if (estimate > static_cast<double>(walk_cap))
        throw ResourceGuardError("gamma_oracle: estimated walk count " + std::to_string(estimate) +
                                 " exceeds cap " + std::to_string(walk_cap));

    const auto& catalog = enumerate_catalog(k);
    state.bucket_keys.reserve(catalog.size());
    for (const auto& entry : catalog) state.bucket_keys.push_back(entry.graph.key());
    state.buckets.resize(catalog.size());
    state.walk.assign(k, 0);
    state.label_scratch.assign(d, -1);

    for (int start = 0; start < d; ++start) {
        state.walk[0] = start;
        state.dfs(1, 1.0);
    }

    WalkWeightTable table;
    table.k = k;
    table.source = WalkWeightTable::Source::oracle;
    for (std::size_t n = 0; n < catalog.size(); ++n)
        table.weights.emplace(state.bucket_keys[n], state.buckets[n].value());
    return table;
}

} // namespace

WalkWeightTable gamma_oracle(const SymmetricMatrix& m, int k, std::uint64_t walk_cap) {
    return gamma_oracle_dense(m.mat(), k, walk_cap);
}

WalkWeightTable gamma_oracle(const SampledMatrix& s, int k, std::uint64_t walk_cap) {
    return gamma_oracle_dense(s.to_dense().mat(), k, walk_cap);
}

double schatten_power_direct(const SampledMatrix& s, int k, double p) {
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("schatten_power_direct: need 0 < p <= 1");
    if (k != 1 && k != 2) throw std::invalid_argument("schatten_power_direct: k must be 1 or 2");
    CompensatedSum acc;
    for (const auto& e : s.entries()) {
        if (k == 1) {
            if (e.i == e.j) acc.add(e.value);
        } else {
            acc.add((e.i == e.j ? 1.0 : 2.0) * e.value * e.value);
        }
    }
    return acc.value() / p;
}

namespace detail {

WalkWeightTable gamma_small(const SymmetricMatrix& m, int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("gamma_small: k must be 1 or 2");
    const int d = m.dim();
    WalkWeightTable table;
    table.k = k;
    table.source = WalkWeightTable::Source::closed_form;
    if (k == 1) {
        CompensatedSum loop;
        for (int i = 0; i < d; ++i) loop.add(m(i, i));
        table.weights.emplace("v1:0-0x1", loop.value());
    } else {
        CompensatedSum loop2, edge2;
        for (int i = 0; i < d; ++i) {
            loop2.add(m(i, i) * m(i, i));
            for (int j = i + 1; j < d; ++j) edge2.add(2.0 * m(i, j) * m(i, j));
        }
        table.weights.emplace("v1:0-0x2", loop2.value());
        table.weights.emplace("v2:0-1x2", edge2.value());
    }
    return table;
}

} // namespace detail

WalkWeightTable gamma_closed_form(const SymmetricMatrix& m, int k) {
    if (k < 3 || k > 7)
        throw std::invalid_argument("gamma_closed_form: k must be in 3..7");
    const auto values = detail::closed_form_values(m.mat(), k);
    const auto& label_keys = detail::closed_form_label_keys(k);

    WalkWeightTable table;
    table.k = k;
    table.source = WalkWeightTable::Source::closed_form;
    for (const auto& [label, value] : values) {
        const auto found =
            std::find_if(label_keys.begin(), label_keys.end(),
                         [&](const auto& lk) { return label == lk.first; });
        if (found == label_keys.end())
            throw std::logic_error("gamma_closed_form: no key for formula " + label);
        table.weights.emplace(found->second, value);
    }

    const auto& catalog = enumerate_catalog(k);
    if (table.weights.size() != catalog.size())
        throw std::logic_error("gamma_closed_form: formula table does not cover the catalog");
    return table;
}

} // namespace schatten
