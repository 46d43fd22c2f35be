#include "doctest.h"

#include "dpic/instance.hpp"
#include "dpic/scheduler.hpp"
#include "fixtures.hpp"

using namespace dpic;

TEST_CASE("build_instance derives universe and target") {
    const auto ex = build_instance(9, 7, 3);
    CHECK(ex.universe_size() == 75);
    CHECK(ex.target() == 16);
    CHECK(ex.regime() == Regime::theorem_covered);

    // Intervals [1,2], [2,4], [4,7] laid out by hand.
    const auto small = build_instance(3, 2, 1);
    CHECK(small.universe_size() == 7);
    CHECK(small.target() == 5);
    CHECK(side_info(small, ClientId{2}) == SideInfoInterval{ClientId{2}, MessageId{2}, MessageId{4}});
    CHECK(side_info(small, ClientId{3}) == SideInfoInterval{ClientId{3}, MessageId{4}, MessageId{7}});
}

TEST_CASE("build_instance rejects bad parameters") {
    CHECK_THROWS_AS(build_instance(2, 5, 6), ParameterError);
    CHECK_THROWS_AS(build_instance(1, 5, 2), ParameterError);
    CHECK_THROWS_AS(build_instance(4, 0, 0), ParameterError);
    CHECK_THROWS_AS(build_instance(4, 3, 0), ParameterError);
}

TEST_CASE("regime flags each failing hypothesis") {
    CHECK(build_instance(2, 4, 2).violated_hypotheses() == std::vector<std::string>{"C ≥ 3"});
    CHECK(build_instance(5, 3, 2).violated_hypotheses() == std::vector<std::string>{"K ≥ 2P"});
    CHECK(build_instance(9, 7, 2).violated_hypotheses() == std::vector<std::string>{"P ≥ r_max − 2"});
    CHECK(build_instance(9, 7, 2).regime() == Regime::out_of_theorem);
    // P = K is allowed by the model, but not by the theorem.
    CHECK(build_instance(3, 4, 4).regime() == Regime::out_of_theorem);
}

TEST_CASE("side_info matches the example's client table") {
    const auto inst = build_instance(9, 7, 3);
    const auto& golden = fixtures::example_intervals();
    for (std::uint32_t i = 1; i <= 9; ++i) {
        const auto iv = side_info(inst, ClientId{i});
        CHECK(iv.start.value == golden[i - 1].first);
        CHECK(iv.end.value == golden[i - 1].second);
    }
    CHECK(side_info(inst, ClientId{1}).end.value == 7);
    CHECK_THROWS_AS(side_info(inst, ClientId{0}), ParameterError);
    CHECK_THROWS_AS(side_info(inst, ClientId{10}), ParameterError);
}

TEST_CASE("segment accessors") {
    const auto inst = build_instance(9, 7, 3);
    CHECK(segment(inst, ClientId{4}, SegmentKind::first, 1) == MessageId{16});
    CHECK(segment(inst, ClientId{5}, SegmentKind::unique, 1) == MessageId{26});
    CHECK(segment(inst, ClientId{2}, SegmentKind::last, 1) == MessageId{10});
    CHECK(last_unique(inst, ClientId{8}) == MessageId{60});
    CHECK(last_unique(inst, ClientId{2}) == MessageId{9});

    CHECK_THROWS_AS(segment(inst, ClientId{2}, SegmentKind::first, 4), SegmentError);
    CHECK_THROWS_AS(segment(inst, ClientId{2}, SegmentKind::last, 0), SegmentError);
    // |I_2| = 8 leaves two unique messages.
    CHECK_THROWS_AS(segment(inst, ClientId{2}, SegmentKind::unique, 3), SegmentError);

    const auto tight = build_instance(3, 4, 2);  // |I_1| = 2P
    CHECK(unique_count(tight, ClientId{1}) == 0);
    CHECK_THROWS_AS(last_unique(tight, ClientId{1}), SegmentError);
    CHECK_THROWS_AS(segment(tight, ClientId{1}, SegmentKind::unique, 1), SegmentError);
}

TEST_CASE("validate_lpsfo") {
    const auto inst = build_instance(9, 7, 3);
    const auto all = all_intervals(inst);
    CHECK(validate_lpsfo(all, 7, 3));
    CHECK(validate_lpsfo(std::span(all).subspan(5), 12, 3));
    CHECK_FALSE(validate_lpsfo(all, 8, 3));
    CHECK_FALSE(validate_lpsfo(all, 7, 2));

    const std::vector<SideInfoInterval> bad{{ClientId{1}, MessageId{1}, MessageId{5}},
                                            {ClientId{2}, MessageId{4}, MessageId{9}}};
    CHECK_FALSE(validate_lpsfo(bad, 5, 3));
    CHECK(validate_lpsfo(bad, 5, 2));
    CHECK_FALSE(validate_lpsfo(std::span<const SideInfoInterval>{}, 5, 2));
    CHECK(validate_lpsfo(std::span(all).subspan(8), 15, 3));
}

TEST_CASE("interval geometry holds exhaustively for small instances") {
    for (std::uint32_t c = 2; c <= 40; ++c) {
        for (std::uint32_t k = 1; k <= 12; ++k) {
            for (std::uint32_t p = 1; p <= k; ++p) {
                const auto inst = build_instance(c, k, p);
                const auto oracle = fixtures::iterative_intervals(c, k, p);
                const auto all = all_intervals(inst);
                REQUIRE(validate_lpsfo(all, k, p));
                CHECK(inst.universe_size() == all.back().end.value);
                for (std::uint32_t i = 1; i <= c; ++i) {
                    const ClientId id{i};
                    const auto& iv = all[i - 1];
                    CHECK(iv.start.value == oracle[i - 1].first);
                    CHECK(iv.end.value == oracle[i - 1].second);
                    CHECK(iv.size() == k + i - 1);
                    if (i >= 2)
                        for (std::uint32_t j = 1; j <= p; ++j)
                            CHECK(segment(inst, id, SegmentKind::first, j) ==
                                  segment(inst, ClientId{i - 1}, SegmentKind::last, j));
                    if (iv.size() >= 2 * p) {
                        // F, U, L tile the interval in order.
                        std::uint32_t expect = iv.start.value;
                        for (std::uint32_t j = 1; j <= p; ++j)
                            CHECK(segment(inst, id, SegmentKind::first, j).value == expect++);
                        for (std::uint32_t j = 1; j <= unique_count(inst, id); ++j)
                            CHECK(segment(inst, id, SegmentKind::unique, j).value == expect++);
                        for (std::uint32_t j = 1; j <= p; ++j)
                            CHECK(segment(inst, id, SegmentKind::last, j).value == expect++);
                        CHECK(expect == iv.end.value + 1);
                    }
                }
            }
        }
    }
}
