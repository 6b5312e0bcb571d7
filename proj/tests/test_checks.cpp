#include <doctest.h>

#include <algorithm>

#include "qmeasure/catalog.hpp"
#include "qmeasure/checks.hpp"
#include "test_support.hpp"

using namespace qmeasure;

TEST_SUITE_BEGIN("checks");

TEST_CASE("grade-2 sweep on the worked spaces") {
    CHECK(grade2_check(catalog::quantum_coin()).pass);
    CHECK(grade2_check(catalog::null_singleton_space()).pass);
    CHECK(grade2_check(from_destructive_pairs(2, 2)).pass);

    CheckReport report = grade2_check(catalog::quantum_coin());
    CHECK(!report.sampled);
    CHECK(report.cases_checked == 256);  // 4^4 assignments
    REQUIRE(!report.notes.empty());
    CHECK(report.notes.front().find("finiteness") != std::string::npos);
}

TEST_CASE("cubed cardinality fails grade-2 at the singleton triple") {
    // Three singletons: 27 on the left, 3*8 - 2*3*1 = 18 on the right.
    CheckReport report = grade2_check(catalog::cube_cardinality_table(3));
    CHECK(!report.pass);
    CHECK(report.witness == "A={x1} B={x2} C={x3}");
}

TEST_CASE("additive tables pass every grade") {
    std::mt19937_64 rng(3);
    QMeasureTable table = to_table(testing::random_measure(rng, 6));
    CHECK(grade2_check(table).pass);
    CHECK(graden_check(table, 2).pass);
    CHECK(graden_check(table, 3).pass);
    CHECK(graden_check(table, 4).pass);
}

TEST_CASE("grade-2 implies grade-3 and grade-4") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        QMeasureTable table = testing::random_q_table(rng, 5);
        CHECK(graden_check(table, 3).pass);
        CHECK(graden_check(table, 4).pass);
    }
    CHECK(graden_check(from_destructive_pairs(1, 2), 3).pass);
    CHECK(!graden_check(catalog::cube_cardinality_table(3), 2).pass);
}

TEST_CASE("sampled sweeps kick in beyond twelve points") {
    std::mt19937_64 rng(23);
    CheckConfig config;
    config.sample_count = 200'000;

    QMeasureTable big = from_measure_squared(testing::random_measure(rng, 13, 0.0));
    CheckReport report = grade2_check(big, config);
    CHECK(report.pass);
    CHECK(report.sampled);
    CHECK(report.seed == config.seed);
    CHECK(report.cases_checked == 200'000);

    CheckReport bad = grade2_check(catalog::cube_cardinality_table(13), config);
    CHECK(!bad.pass);
    CHECK(bad.sampled);
}

TEST_CASE("pair identity agrees with the grade-2 verdict") {
    CheckReport pass_report = theorem21_check(catalog::quantum_coin());
    CHECK(pass_report.pass);
    CHECK(std::find(pass_report.notes.begin(), pass_report.notes.end(), "verdicts agree") != pass_report.notes.end());

    CheckReport fail_report = theorem21_check(catalog::cube_cardinality_table(3));
    CHECK(!fail_report.pass);
    CHECK(std::find(fail_report.notes.begin(), fail_report.notes.end(), "verdicts agree") != fail_report.notes.end());

    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 8; ++trial)
        CHECK(theorem21_check(testing::random_q_table(rng, 4)).pass);

    QMeasureTable possibility = catalog::max_weight_table(FiniteMeasure(Universe::of_size(4), {Rat(1), Rat(2), Rat(3), Rat(4)}));
    CheckReport possibility_report = theorem21_check(possibility);
    CHECK(!possibility_report.pass);
}

TEST_CASE("pairwise-union expansion matches the direct value") {
    QMeasureTable coin = catalog::quantum_coin();
    std::vector<SubsetMask> singletons;
    for (int i = 0; i < 4; ++i) singletons.push_back(SubsetMask::singleton(i));
    CHECK(disjoint_union_expand(coin, singletons) == 1);  // = mu(X)

    // A part equal to the empty set drops out.
    std::vector<SubsetMask> with_empty{SubsetMask{0b0011}, SubsetMask{0b0100}, SubsetMask::empty(), SubsetMask{0b1000}};
    std::vector<SubsetMask> without{SubsetMask{0b0011}, SubsetMask{0b0100}, SubsetMask{0b1000}};
    CHECK(disjoint_union_expand(coin, with_empty) == disjoint_union_expand(coin, without));

    QMeasureTable pairs = from_destructive_pairs(1, 1);
    std::vector<SubsetMask> parts{SubsetMask::singleton(0), SubsetMask::singleton(1), SubsetMask::singleton(2)};
    CHECK(disjoint_union_expand(pairs, parts) == 1);

    std::vector<SubsetMask> overlapping{SubsetMask{0b0011}, SubsetMask{0b0110}, SubsetMask{0b1000}};
    CHECK_THROWS_AS(disjoint_union_expand(coin, overlapping), std::invalid_argument);
}

TEST_CASE("expansion equals the table value on all disjoint families") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        QMeasureTable table = testing::random_q_table(rng, 6);
        const auto& v = table.value_doubles();
        // All assignments of 6 points into 3 parts plus rest: dyadic values
        // make the double comparison exact.
        for (std::uint32_t code = 0; code < 4u * 4u * 4u * 4u * 4u * 4u; ++code) {
            std::uint32_t parts[3] = {0, 0, 0};
            std::uint32_t c = code;
            for (int p = 0; p < 6; ++p, c /= 4)
                if (c % 4 != 3) parts[c % 4] |= 1u << p;
            double direct = v[parts[0] | parts[1] | parts[2]];
            double expansion = v[parts[0] | parts[1]] + v[parts[0] | parts[2]] + v[parts[1] | parts[2]] -
                               v[parts[0]] - v[parts[1]] - v[parts[2]];
            if (direct != expansion) {
                CHECK(direct == expansion);
                return;
            }
        }
    }
    CHECK(true);
}

TEST_CASE("compatibility basics") {
    QMeasureTable coin = catalog::quantum_coin();
    SubsetMask a{0b0011}, b{0b1100};
    CHECK(is_compatible(coin, a, a));
    CHECK(!is_compatible(coin, a, b));  // 1 != 1/4 + 1/4
    CHECK(is_compatible(coin, a, SubsetMask::empty()));
    CHECK(is_compatible(coin, coin.universe().full(), a));
}

TEST_CASE("the two compatibility forms disagree only off the q-measure class") {
    // Crafted so the union form holds at (A,B) while the symmetric-difference
    // form fails: mu(X)=2 = mu(A)+mu(B)-mu(A^B), but mu(A delta B) = 5 != 2.
    Universe u = Universe::of_size(3);
    std::vector<Rat> values(8);
    values[0b001] = 1;  // {x1}
    values[0b010] = 0;  // {x2}
    values[0b100] = 1;  // {x3}
    values[0b011] = 1;  // A = {x1,x2}
    values[0b110] = 1;  // B = {x2,x3}
    values[0b101] = 5;  // A delta B
    values[0b111] = 2;
    QMeasureTable crafted(u, std::move(values));
    CHECK_THROWS_AS(is_compatible(crafted, SubsetMask{0b011}, SubsetMask{0b110}), std::logic_error);
}

TEST_CASE("centers of the worked spaces") {
    std::vector<SubsetMask> coin_center = mu_center(catalog::quantum_coin());
    REQUIRE(coin_center.size() == 2);
    CHECK(coin_center[0] == SubsetMask::empty());
    CHECK(coin_center[1] == SubsetMask{0b1111});

    // One destructive pair and a bystander: the pair block and the bystander
    // split the space.
    QMeasureTable pairs = from_destructive_pairs(1, 1);
    std::vector<SubsetMask> center = mu_center(pairs);
    auto contains = [&](SubsetMask m) { return std::find(center.begin(), center.end(), m) != center.end(); };
    CHECK(contains(SubsetMask{0b011}));  // {x1,y1}
    CHECK(contains(SubsetMask{0b100}));  // {z1}
    CHECK(contains(SubsetMask::empty()));
    CHECK(contains(pairs.universe().full()));

    std::vector<SubsetMask> null_center = mu_center(catalog::null_singleton_space());
    REQUIRE(null_center.size() == 4);
    CHECK(null_center[1] == SubsetMask{0b001});  // {x1}
    CHECK(null_center[2] == SubsetMask{0b110});  // {x2,x3}

    // Additive tables are compatible with everything.
    std::mt19937_64 rng(37);
    QMeasureTable additive = to_table(testing::random_measure(rng, 4));
    CHECK(mu_center(additive).size() == 16);
}

TEST_CASE("center is closed under complement and union") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        QMeasureTable table = testing::random_q_table(rng, 5);
        std::vector<SubsetMask> center = mu_center(table);
        auto contains = [&](SubsetMask m) { return std::find(center.begin(), center.end(), m) != center.end(); };
        CHECK(contains(SubsetMask::empty()));
        CHECK(contains(table.universe().full()));
        for (SubsetMask a : center) {
            CHECK(contains(table.universe().complement(a)));
            for (SubsetMask b : center) CHECK(contains(a | b));
        }
    }
}

TEST_CASE("splitting sets coincide with the center") {
    QMeasureTable coin = catalog::quantum_coin();
    CHECK(is_splitting(coin, coin.universe().full()));
    CHECK(is_splitting(coin, SubsetMask::empty()));
    CHECK(!is_splitting(coin, SubsetMask::singleton(0)));  // B=X: 1 != 1/16 + 9/16

    std::mt19937_64 rng(43);
    QMeasureTable additive = to_table(testing::random_measure(rng, 4));
    for (std::uint32_t m = 0; m < 16; ++m) CHECK(is_splitting(additive, SubsetMask{m}));

    for (int trial = 0; trial < 10; ++trial) {
        QMeasureTable table = testing::random_q_table(rng, 5);
        std::vector<SubsetMask> center = mu_center(table);
        for (std::uint32_t m = 0; m < table.subset_count(); ++m) {
            bool central = std::find(center.begin(), center.end(), SubsetMask{m}) != center.end();
            CHECK(is_splitting(table, SubsetMask{m}) == central);
        }
    }
}

TEST_CASE("the restriction to the center is a measure") {
    CHECK(center_measure_check(catalog::quantum_coin()).pass);
    CHECK(center_measure_check(catalog::null_singleton_space()).pass);
    CHECK(center_measure_check(from_destructive_pairs(1, 1)).pass);
    CHECK(center_measure_check(from_destructive_pairs(2, 1)).pass);

    std::mt19937_64 rng(47);
    QMeasureTable additive = to_table(testing::random_measure(rng, 4));
    CHECK(center_measure_check(additive).pass);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(center_measure_check(testing::random_q_table(rng, 5)).pass);
}

TEST_CASE("regularity of the worked spaces") {
    RegularityReport coin = regularity_check(catalog::quantum_coin());
    CHECK(coin.regular);
    CHECK(coin.completely_regular);

    RegularityReport null_singleton = regularity_check(catalog::null_singleton_space());
    CHECK(null_singleton.regular);
    CHECK(null_singleton.completely_regular);

    RegularityReport pairs = regularity_check(from_destructive_pairs(1, 1));
    CHECK(pairs.regular);
    CHECK(!pairs.completely_regular);
    CHECK(pairs.witness_complete.find("{x1,y1}") != std::string::npos);

    CHECK(regularity_check(from_destructive_pairs(2, 2)).regular);
}

TEST_CASE("self-complement equivalence with the total") {
    EquivalenceReport pairs = theorem24_check(from_destructive_pairs(1, 1), Rat(1));
    CHECK(pairs.equivalent);
    CHECK(pairs.cases_checked == 8);

    std::mt19937_64 rng(53);
    FiniteMeasure nu = testing::random_measure(rng, 4);
    QMeasureTable additive = to_table(nu);
    EquivalenceReport report = theorem24_check(additive, nu.total());
    CHECK(report.equivalent);

    EquivalenceReport coin = theorem24_check(catalog::quantum_coin(), Rat(1));
    CHECK(coin.equivalent);

    // With the wrong total the equivalence collapses immediately (the empty
    // set is central yet the sum differs).
    EquivalenceReport wrong = theorem24_check(catalog::quantum_coin(), Rat(2));
    CHECK(!wrong.equivalent);
}

TEST_SUITE_END();
