#include <vector>

#include "doctest.h"
#include "dskp/generators.hpp"
#include "dskp/pareto.hpp"

using namespace dskp;

namespace {

ParetoSet make_set(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
    ParetoSet s;
    for (auto [w, p] : pairs) s.insert(WpPair{w, p, std::nullopt});
    return s;
}

std::vector<std::pair<std::int64_t, std::int64_t>> as_pairs(const ParetoSet& s) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& p : s.pairs()) out.emplace_back(p.weight, p.profit);
    return out;
}

}  // namespace

TEST_CASE("insert: dominance pruning") {
    ParetoSet s = make_set({{3, 5}, {4, 6}});
    s.insert({3, 6, std::nullopt});
    CHECK(as_pairs(s) == std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 6}});

    ParetoSet empty;
    empty.insert({0, 0, std::nullopt});
    CHECK(as_pairs(empty) == std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 0}});

    ParetoSet chain = make_set({{1, 1}, {5, 9}});
    chain.insert({3, 4, std::nullopt});
    CHECK(as_pairs(chain) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {3, 4}, {5, 9}});
}

TEST_CASE("cross_sum") {
    CHECK(as_pairs(cross_sum(make_set({{1, 1}}), make_set({{2, 3}}), 10)) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 4}});
    CHECK(cross_sum(make_set({{1, 1}}), make_set({{2, 3}}), 2).empty());
    // frozen via enumeration of all four sums: (0,0),(1,2),(1,2),(2,4)
    CHECK(as_pairs(cross_sum(make_set({{0, 0}, {1, 2}}), make_set({{0, 0}, {1, 2}}), 2)) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 0}, {1, 2}, {2, 4}});
}

TEST_CASE("merge") {
    CHECK(as_pairs(merge(make_set({{1, 1}}), make_set({{1, 1}}))) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}});
    CHECK(as_pairs(merge(make_set({{1, 3}}), make_set({{2, 2}}))) ==
          std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 3}});
    ParetoSet x = make_set({{2, 5}, {4, 9}});
    CHECK(merge(ParetoSet{}, x) == x);
}

TEST_CASE("best_profit") {
    ParetoSet s = make_set({{1, 1}, {3, 4}});
    CHECK(s.best_profit(2) == 1);
    CHECK(s.best_profit(3) == 4);
    CHECK_FALSE(ParetoSet{}.best_profit(5).has_value());
    CHECK_FALSE(s.best_profit(0).has_value());
}

TEST_CASE("witnesses: union on cross_sum, sums stay consistent") {
    Bitset wa(4);
    wa.set(0);
    Bitset wb(4);
    wb.set(2);
    ParetoSet a = ParetoSet::singleton({2, 3, wa});
    ParetoSet b = ParetoSet::singleton({1, 5, wb});
    ParetoSet c = cross_sum(a, b, 10);
    REQUIRE(c.size() == 1);
    REQUIRE(c.pairs()[0].witness.has_value());
    CHECK(c.pairs()[0].witness->to_vector() == std::vector<int>{0, 2});
    CHECK(c.pairs()[0].weight == 3);
    CHECK(c.pairs()[0].profit == 8);
}

TEST_CASE("property: random operation sequences preserve the antichain") {
    Rng rng(2024);
    for (int round = 0; round < 300; ++round) {
        ParetoSet acc;
        const std::int64_t cap = rng.uniform(0, 30);
        for (int step = 0; step < 12; ++step) {
            const int op = static_cast<int>(rng.uniform(0, 2));
            if (op == 0) {
                acc.insert({rng.uniform(0, cap), rng.uniform(0, 40), std::nullopt});
            } else {
                ParetoSet other;
                for (int i = 0; i < 4; ++i)
                    other.insert({rng.uniform(0, cap), rng.uniform(0, 40), std::nullopt});
                acc = op == 1 ? merge(acc, other) : cross_sum(acc, other, cap);
            }
            REQUIRE(acc.check_antichain());
            // capacity-respecting sequences stay within the size bound
            CHECK(acc.size() <= static_cast<std::size_t>(cap) + 1);
        }
    }
}

TEST_CASE("property: cross_sum commutes and associates on pair values") {
    Rng rng(77);
    for (int round = 0; round < 100; ++round) {
        auto rand_set = [&] {
            ParetoSet s;
            const int len = static_cast<int>(rng.uniform(0, 5));
            for (int i = 0; i < len; ++i)
                s.insert({rng.uniform(0, 10), rng.uniform(0, 10), std::nullopt});
            return s;
        };
        ParetoSet a = rand_set(), b = rand_set(), c = rand_set();
        const std::int64_t cap = rng.uniform(0, 25);
        CHECK(cross_sum(a, b, cap) == cross_sum(b, a, cap));
        CHECK(cross_sum(cross_sum(a, b, cap), c, cap) == cross_sum(a, cross_sum(b, c, cap), cap));
    }
}
