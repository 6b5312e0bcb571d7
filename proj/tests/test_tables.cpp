#include <doctest.h>

#include "qmeasure/catalog.hpp"
#include "qmeasure/pair_matrix.hpp"
#include "qmeasure/table.hpp"
#include "test_support.hpp"

using namespace qmeasure;

TEST_SUITE_BEGIN("tables");

TEST_CASE("quantum coin values") {
    QMeasureTable mu = catalog::quantum_coin();
    CHECK(mu[catalog::quantum_coin_heads_event()] == Rat(9, 16));
    CHECK(mu[SubsetMask::empty()] == 0);
    CHECK(mu[SubsetMask::singleton(0)] == Rat(1, 16));
    CHECK(mu[mu.universe().full()] == 1);
    CHECK(evaluate(mu, SubsetMask{0b0011}) == Rat(1, 4));
    CHECK(mu.grade2_verified());
}

TEST_CASE("null-singleton space values") {
    QMeasureTable mu = catalog::null_singleton_space();
    CHECK(mu[SubsetMask::singleton(0)] == 0);
    CHECK(mu[SubsetMask::singleton(1)] == 1);
    CHECK(mu[mu.universe().full()] == 1);
}

TEST_CASE("squared measure requires nonnegative weights") {
    Universe u = Universe::of_size(2);
    CHECK_THROWS_AS(from_measure_squared(FiniteMeasure(u, {Rat(1), Rat(-1)})), std::invalid_argument);
    QMeasureTable zero = from_measure_squared(FiniteMeasure(u, {Rat(0), Rat(0)}));
    for (std::uint32_t m = 0; m < 4; ++m) CHECK(zero[SubsetMask{m}] == 0);
}

TEST_CASE("table construction enforces the invariants") {
    Universe u = Universe::of_size(2);
    CHECK_THROWS_AS(QMeasureTable(u, {Rat(1), Rat(0), Rat(0), Rat(0)}), std::invalid_argument);
    CHECK_THROWS_AS(QMeasureTable(u, {Rat(0), Rat(-1), Rat(0), Rat(0)}), std::invalid_argument);
    CHECK_THROWS_AS(QMeasureTable(u, {Rat(0), Rat(1)}), std::invalid_argument);

    QMeasureTable ok(u, {Rat(0), Rat(1), Rat(1), Rat(1)});
    CHECK_THROWS_AS(evaluate(ok, SubsetMask{4}), std::invalid_argument);
    Universe other = Universe::of_size(3);
    CHECK_THROWS_AS(ok.require_same_universe(other), std::invalid_argument);
}

TEST_CASE("complex amplitudes cancel and interfere") {
    Universe u = Universe::of_size(2);
    // Opposite real amplitudes annihilate on the union.
    QMeasureTable cancel = from_complex_amplitude(u, {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}});
    CHECK(cancel[u.full()] == 0);
    CHECK(cancel[SubsetMask::singleton(0)] == 1);
    CHECK(cancel[SubsetMask::singleton(1)] == 1);

    // |1 + i|^2 = 2.
    QMeasureTable rotated = from_complex_amplitude(u, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK(rotated[u.full()] == 2);
}

TEST_CASE("interference identity is exact for every disjoint pair") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        Universe u = Universe::of_size(n);
        auto amplitudes = testing::random_amplitudes(rng, n);
        QMeasureTable mu = from_complex_amplitude(u, amplitudes);
        for (std::uint32_t a = 0; a < u.subset_count(); ++a) {
            for (std::uint32_t b = 0; b < u.subset_count(); ++b) {
                if ((a & b) != 0) continue;
                Rat lhs = mu[SubsetMask{a} | SubsetMask{b}] - mu[SubsetMask{a}] - mu[SubsetMask{b}];
                CHECK(lhs == interference_term(amplitudes, SubsetMask{a}, SubsetMask{b}));
            }
        }
    }
}

TEST_CASE("real amplitudes agree with the rank-one atom matrix") {
    std::mt19937_64 rng(7);
    int n = 4;
    Universe u = Universe::of_size(n);
    std::vector<Rat> w;
    std::vector<RatComplex> amps;
    std::uniform_int_distribution<int> num(-6, 6);
    for (int i = 0; i < n; ++i) {
        Rat v(num(rng), 2);
        w.push_back(v);
        amps.push_back({v, Rat(0)});
    }
    std::vector<std::vector<Rat>> outer(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) outer[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)];

    QMeasureTable via_amplitude = from_complex_amplitude(u, amps);
    QMeasureTable via_matrix = from_pair_matrix(PairMeasureMatrix(u, outer));
    for (std::uint32_t m = 0; m < u.subset_count(); ++m)
        CHECK(via_amplitude[SubsetMask{m}] == via_matrix[SubsetMask{m}]);
}

TEST_CASE("destructive pairs annihilate") {
    QMeasureTable mu = from_destructive_pairs(2, 1);  // x1 x2 y1 y2 z1
    const Universe& u = mu.universe();
    SubsetMask x1 = SubsetMask::singleton(u.index_of("x1"));
    SubsetMask y1 = SubsetMask::singleton(u.index_of("y1"));
    SubsetMask y2 = SubsetMask::singleton(u.index_of("y2"));
    SubsetMask z1 = SubsetMask::singleton(u.index_of("z1"));
    CHECK(mu[x1 | y1 | z1] == 1);
    CHECK(mu[x1 | y1 | y2 | z1] == 2);
    CHECK(mu[SubsetMask::empty()] == 0);
    CHECK(mu[u.full()] == 1);  // 5 points minus two annihilated pairs

    CHECK_THROWS_AS(from_destructive_pairs(10, 2), std::invalid_argument);
    CHECK_THROWS_AS(from_destructive_pairs(-1, 2), std::invalid_argument);
}

TEST_CASE("additive tables are additive") {
    std::mt19937_64 rng(123);
    FiniteMeasure nu = testing::random_measure(rng, 5);
    QMeasureTable table = to_table(nu);
    for (std::uint32_t a = 0; a < 32; ++a)
        for (std::uint32_t b = 0; b < 32; ++b)
            if ((a & b) == 0)
                CHECK(table[SubsetMask{a} | SubsetMask{b}] == table[SubsetMask{a}] + table[SubsetMask{b}]);
    CHECK(nu(SubsetMask{0b10110}) == table[SubsetMask{0b10110}]);
}

TEST_SUITE_END();
