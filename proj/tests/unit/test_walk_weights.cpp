#include "schatten/walk_weights.hpp"

#include "schatten/rng.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace schatten;
using schatten::testing::random_symmetric;
using schatten::testing::rel_err;

namespace {

double trace_power(const SymmetricMatrix& m, int k) {
    Matrix power = m.mat();
    for (int n = 1; n < k; ++n) power = power * m.mat();
    return power.trace();
}

} // namespace

TEST_CASE("formula-table partition identity (label order, no key mapping)") {
    for (int k = 3; k <= 7; ++k) {
        for (std::uint64_t seed : {11u, 12u, 13u}) {
            const auto m = random_symmetric(10, seed * 100 + k);
            double sum = 0.0;
            for (const auto& [label, value] : detail::closed_form_values(m.mat(), k)) sum += value;
            CHECK(rel_err(sum, trace_power(m, k)) < 1e-9);
        }
    }
}

TEST_CASE("oracle partition identity") {
    for (int k = 1; k <= 7; ++k) {
        const auto m = random_symmetric(6, 500 + k);
        const auto table = gamma_oracle(m, k);
        CHECK(rel_err(table.partition_sum(), trace_power(m, k)) < 1e-9);
    }
}

TEST_CASE("oracle on toy fixtures") {
    // identity(2), k = 4: the only walks are four repeats of each loop.
    const auto id2 = SymmetricMatrix::identity(2);
    const auto t4 = gamma_oracle(id2, 4);
    CHECK(t4.at("v1:0-0x4") == 2.0);
    for (const auto& [key, w] : t4.weights)
        if (key != "v1:0-0x4") CHECK(w == 0.0);

    // all-ones 2x2 incl. diagonal, k = 3: tr(M^3) = 8.
    const auto ones2 = SymmetricMatrix::from_upper(Matrix::Ones(2, 2));
    CHECK(rel_err(gamma_oracle(ones2, 3).partition_sum(), 8.0) < 1e-12);
}

TEST_CASE("closed form equals oracle per bucket") {
    for (int k = 3; k <= 7; ++k) {
        for (std::uint64_t seed : {21u, 22u}) {
            const auto m = random_symmetric(k == 7 ? 7 : 8, seed * 10 + k);
            const auto closed = gamma_closed_form(m, k);
            const auto oracle = gamma_oracle(m, k);
            REQUIRE(closed.weights.size() == oracle.weights.size());
            for (const auto& [key, want] : oracle.weights) {
                INFO("k=", k, " seed=", seed, " key=", key);
                const double got = closed.at(key);
                CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
            }
        }
    }
}

TEST_CASE("frozen label map matches a fresh value matching") {
    for (int k = 3; k <= 7; ++k) {
        const auto m = random_symmetric(8, 7000 + k, 0.8);
        const auto values = detail::closed_form_values(m.mat(), k);
        const auto oracle = gamma_oracle(m, k);
        const auto& frozen = detail::closed_form_label_keys(k);
        REQUIRE(frozen.size() == values.size());
        for (const auto& [label, value] : values) {
            // the frozen key must be the (unique) oracle bucket with this value
            const auto it = std::find_if(frozen.begin(), frozen.end(), [&](const auto& lk) {
                return label == lk.first;
            });
            REQUIRE(it != frozen.end());
            INFO("k=", k, " label=", label);
            CHECK(rel_err(value, oracle.at(it->second)) < 1e-9);
        }
    }
}

TEST_CASE("zero diagonal kills every loop pattern exactly") {
    auto m = random_symmetric(9, 314);
    for (int i = 0; i < m.dim(); ++i) m.set(i, i, 0.0);
    for (int k = 3; k <= 7; ++k) {
        const auto closed = gamma_closed_form(m, k);
        for (const auto& entry : enumerate_catalog(k))
            if (entry.loops > 0) CHECK(closed.at(entry.graph.key()) == 0.0);
    }
}

TEST_CASE("scale linearity gamma_{cM} = c^k gamma_M") {
    const auto m = random_symmetric(7, 2718);
    const double c = -1.7;
    const auto scaled = m.scaled(c);
    for (int k = 3; k <= 6; ++k) {
        const auto base = gamma_closed_form(m, k);
        const auto after = gamma_closed_form(scaled, k);
        for (const auto& [key, w] : base.weights)
            CHECK(rel_err(after.at(key), std::pow(c, k) * w) < 1e-9);
    }
}

TEST_CASE("closed form equals oracle on degenerate input classes") {
    // sparse sample of a dense matrix (many exact zeros)
    const auto base = random_symmetric(8, 640);
    SymmetricMatrix sparse(8);
    {
        Rng rng(641);
        for (int i = 0; i < 8; ++i)
            for (int j = i; j < 8; ++j)
                if (rng.bernoulli(0.3)) sparse.set(i, j, base(i, j));
    }
    // 0/1 indicator with repeated values (integer walk counting)
    SymmetricMatrix indicator(7);
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) indicator.set(i, j, 1.0);

    for (const auto* m : {&sparse, &indicator}) {
        for (int k = 3; k <= 7; ++k) {
            const auto closed = gamma_closed_form(*m, k);
            const auto oracle = gamma_oracle(*m, k);
            for (const auto& [key, want] : oracle.weights) {
                INFO("k=", k, " key=", key);
                CHECK(std::abs(closed.at(key) - want) <=
                      1e-9 * std::max(1.0, std::abs(want)));
            }
        }
    }
}

TEST_CASE("gamma_small agrees with the oracle for k = 1, 2") {
    const auto m = random_symmetric(7, 909);
    for (int k : {1, 2}) {
        const auto direct = detail::gamma_small(m, k);
        const auto oracle = gamma_oracle(m, k);
        for (const auto& [key, want] : oracle.weights)
            CHECK(rel_err(direct.at(key), want) < 1e-12);
    }
}

TEST_CASE("schatten_power_direct") {
    const auto m = random_symmetric(8, 5150);
    const auto full = SampledMatrix::full(m);
    CHECK(rel_err(schatten_power_direct(full, 1, 1.0), m.mat().trace()) < 1e-12);
    CHECK(rel_err(schatten_power_direct(full, 2, 1.0), m.mat().squaredNorm()) < 1e-12);
}

TEST_CASE("k = 1 estimate is exactly unbiased over all sampling patterns") {
    const auto m = random_symmetric(4, 5151);
    const double p = 0.5;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) pairs.emplace_back(i, j);
    double expectation = 0.0;
    for (int mask = 0; mask < (1 << 10); ++mask) {
        SampledMatrix s(4);
        int kept = 0;
        for (std::size_t n = 0; n < pairs.size(); ++n)
            if (mask & (1 << n)) {
                s.add(pairs[n].first, pairs[n].second, m(pairs[n].first, pairs[n].second));
                ++kept;
            }
        expectation +=
            std::pow(p, kept) * std::pow(1 - p, 10 - kept) * schatten_power_direct(s, 1, p);
    }
    CHECK(rel_err(expectation, m.mat().trace()) < 1e-12);
}

TEST_CASE("oracle resource guard trips") {
    const auto m = random_symmetric(12, 8);
    CHECK_THROWS_AS(gamma_oracle(m, 9, 1000), ResourceGuardError);
}
