#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "test_support.hpp"

using namespace pbmac;

namespace {

// The worked non-attacking filling of shape (4,1,3,0,1), basement (4,5,3,2,1).
AugmentedFilling worked_example() {
    return AugmentedFilling({4, 1, 3, 0, 1}, Permutation({4, 5, 3, 2, 1}),
                            {{2, 1, 2, 4}, {5}, {3, 4, 3}, {}, {1}});
}

std::multiset<int> stat_multiset(const std::vector<AugmentedFilling>& fs, int (*stat)(const AugmentedFilling&)) {
    std::multiset<int> out;
    for (const auto& f : fs) out.insert(stat(f));
    return out;
}

}  // namespace

TEST_CASE("rev_sort") {
    CHECK(rev_sort({1, 0, 2}) == Composition{2, 1, 0});
    CHECK(rev_sort({2, 2}) == Composition{2, 2});
    CHECK(rev_sort({0, 0, 0}) == Composition{0, 0, 0});
}

TEST_CASE("bruhat order generators") {
    CHECK(bruhat_greater({0, 1}, {1, 0}));
    CHECK(bruhat_greater({2, 0}, {1, 1}));
    CHECK_FALSE(bruhat_greater({1, 0}, {1, 0}));
    CHECK_THROWS_AS(bruhat_greater({1, 0}, {1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(bruhat_greater({1, 0}, {2, 0}), std::invalid_argument);
}

TEST_CASE("bruhat order is a strict partial order") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 0; m <= 4; ++m) {
            const auto comps = compositions_of(m, n);
            for (const Composition& a : comps) {
                CHECK_FALSE(bruhat_greater(a, a));
                const auto lower = bruhat_lower_set(a);
                const std::set<Composition> lower_set(lower.begin(), lower.end());
                for (const Composition& b : lower) {
                    // Transitivity: everything below b stays below a.
                    for (const Composition& c : bruhat_lower_set(b))
                        CHECK(lower_set.count(c) == 1);
                    // Antisymmetry.
                    CHECK_FALSE(bruhat_greater(b, a));
                }
            }
        }
    }
}

TEST_CASE("arm reproduces the reference grid for shape (4,1,0,5,3,1,4)") {
    const Composition shape{4, 1, 0, 5, 3, 1, 4};
    const std::vector<std::vector<int>> expected = {
        {4, 2, 2, 1}, {1}, {}, {6, 4, 3, 2, 1}, {3, 1, 0}, {1}, {4, 3, 1, 1}};
    for (int r = 1; r <= 7; ++r) {
        for (int c = 1; c <= shape[r - 1]; ++c)
            CHECK(arm(shape, {r, c}) == expected[r - 1][c - 1]);
    }
    CHECK(arm(shape, {4, 1}) == 6);
    CHECK(arm(shape, {1, 4}) == 1);
    CHECK(arm({3}, {1, 2}) == 0);
    CHECK_THROWS_AS(arm(shape, {3, 1}), std::out_of_range);
}

TEST_CASE("leg") {
    CHECK(leg({4, 1, 3, 0, 1}, {1, 1}) == 3);
    CHECK(leg({4, 1, 3, 0, 1}, {1, 4}) == 0);
    CHECK(leg({4, 1, 3, 0, 1}, {3, 0}) == 3);  // basement box of row 3
    CHECK_THROWS_AS(leg({1, 0}, {2, 1}), std::out_of_range);
}

TEST_CASE("descents of the worked example") {
    const auto des = descents(worked_example());
    // The two highlighted descents, plus (1,4) whose left neighbour 2 < 4.
    CHECK(std::count(des.begin(), des.end(), Cell{1, 3}) == 1);
    CHECK(std::count(des.begin(), des.end(), Cell{3, 2}) == 1);
    CHECK(des == std::vector<Cell>{{1, 3}, {1, 4}, {3, 2}});

    const AugmentedFilling constant({2, 1}, Permutation({2, 1}), {{2, 2}, {1}});
    CHECK(descents(constant).empty());

    const AugmentedFilling single_row({2}, Permutation({1}), {{1, 2}});
    CHECK(descents(single_row) == std::vector<Cell>{{1, 2}});
}

TEST_CASE("triples of the worked example") {
    const auto triples = classify_triples(worked_example());
    CHECK(triples.size() == 10);
    int inversions = 0;
    bool found_underlined = false;
    for (const Triple& t : triples) {
        inversions += t.is_inversion ? 1 : 0;
        if (t.kind == TripleKind::A && t.a == Cell{1, 0} && t.b == Cell{1, 1} &&
            t.c == Cell{5, 1})
            found_underlined = t.is_inversion;
    }
    CHECK(inversions == 7);
    CHECK(inv(worked_example()) == 7);
    CHECK(found_underlined);

    const AugmentedFilling empty({0, 0}, Permutation({1, 2}), {{}, {}});
    CHECK(classify_triples(empty).empty());
    CHECK(coinv(empty) == 0);
}

TEST_CASE("inv + coinv counts every triple") {
    for (int n = 2; n <= 3; ++n) {
        for (int m = 0; m <= 3; ++m) {
            for (const Composition& shape : compositions_of(m, n)) {
                for (const Permutation& sigma : all_permutations(n)) {
                    for (const auto& f : enumerate_naf(shape, sigma))
                        CHECK(inv(f) + coinv(f) ==
                              static_cast<int>(classify_triples(f).size()));
                }
            }
        }
    }
}

TEST_CASE("the eight fillings of NAF_3124(1,1,0,2)") {
    const auto fillings = enumerate_naf({1, 1, 0, 2}, Permutation({3, 1, 2, 4}));
    REQUIRE(fillings.size() == 8);
    for (const auto& f : fillings) CHECK(is_non_attacking(f));

    CHECK(stat_multiset(fillings, coinv) == std::multiset<int>{0, 0, 0, 0, 1, 1, 1, 2});
    CHECK(stat_multiset(fillings, maj) == std::multiset<int>{0, 0, 0, 0, 1, 1, 1, 1});

    // First filling in fill order: rows 1, 2, -, 43.
    CHECK(fillings.front().rows() == std::vector<std::vector<int>>{{1}, {2}, {}, {4, 3}});
    CHECK(maj(fillings.front()) == 1);
    CHECK(coinv(fillings.front()) == 1);
    CHECK(weight(fillings.front()) == Monomial{1, 1, 1, 1});
}

TEST_CASE("attack detection") {
    CHECK_FALSE(is_non_attacking(
        AugmentedFilling({1, 1}, Permutation({1, 2}), {{1}, {1}})));
    CHECK(is_non_attacking(AugmentedFilling({0, 0}, Permutation({2, 1}), {{}, {}})));
}

TEST_CASE("enumeration matches the brute-force attack filter") {
    for (int n = 1; n <= 3; ++n) {
        for (int m = 0; m <= 3; ++m) {
            for (const Composition& shape : compositions_of(m, n)) {
                for (const Permutation& sigma : all_permutations(n)) {
                    std::set<std::vector<std::vector<int>>> expected;
                    std::vector<Cell> boxes;
                    for (int r = 1; r <= n; ++r)
                        for (int c = 1; c <= shape[r - 1]; ++c) boxes.push_back({r, c});
                    std::vector<std::vector<int>> rows(n);
                    for (int r = 0; r < n; ++r) rows[r].assign(shape[r], 0);
                    auto rec = [&](auto&& self, size_t k) -> void {
                        if (k == boxes.size()) {
                            AugmentedFilling f(shape, sigma, rows);
                            if (is_non_attacking(f)) expected.insert(rows);
                            return;
                        }
                        for (int v = 1; v <= n; ++v) {
                            rows[boxes[k].row - 1][boxes[k].col - 1] = v;
                            self(self, k + 1);
                        }
                    };
                    rec(rec, 0);

                    std::set<std::vector<std::vector<int>>> produced;
                    for (const auto& f : enumerate_naf(shape, sigma)) produced.insert(f.rows());
                    CHECK(produced == expected);
                }
            }
        }
    }
}

TEST_CASE("degenerate all-zero shape has one filling with zero statistics") {
    const auto fs = enumerate_naf({0, 0, 0}, Permutation({2, 3, 1}));
    REQUIRE(fs.size() == 1);
    CHECK(maj(fs[0]) == 0);
    CHECK(coinv(fs[0]) == 0);
    CHECK(weight(fs[0]) == Monomial{0, 0, 0});

    const auto one = enumerate_naf({0, 1}, Permutation({2, 1}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].rows() == std::vector<std::vector<int>>{{}, {1}});
}

TEST_CASE("weight of a row-constant filling is the shape") {
    const AugmentedFilling f({2, 1, 0}, Permutation::identity(3), {{1, 1}, {2}, {}});
    CHECK(weight(f) == Monomial{2, 1, 0});
}

TEST_CASE("shortest permutation") {
    CHECK(shortest_permutation({2, 1}, {1, 2}).one_line() == std::vector<int>{2, 1});
    CHECK(shortest_permutation({1, 1}, {1, 1}).one_line() == std::vector<int>{1, 2});
    CHECK(shortest_permutation({2, 1, 0}, {0, 2, 1}).one_line() == std::vector<int>{2, 3, 1});
    CHECK_THROWS_AS(shortest_permutation({2, 1}, {2, 2}), std::invalid_argument);
}

TEST_CASE("shortest permutation is minimal among all rearranging permutations") {
    for (int n = 2; n <= 4; ++n) {
        for (int m = 0; m <= 4; ++m) {
            for (const Composition& lam : partitions_of(m, n)) {
                for (const Composition& target : rearrangements_of(lam)) {
                    const Permutation best = shortest_permutation(lam, target);
                    CHECK(best.act(lam) == target);
                    for (const Permutation& s : all_permutations(n)) {
                        if (s.act(lam) == target) CHECK(best.length() <= s.length());
                    }
                }
            }
        }
    }
}

TEST_CASE("sorting word turns the partition into the target through strict swaps") {
    for (const Composition& target : rearrangements_of({2, 1, 0})) {
        const Composition lam = rev_sort(target);
        Composition cur = lam;
        for (int k : sorting_word(lam, target)) {
            CHECK(cur[k - 1] > cur[k]);
            std::swap(cur[k - 1], cur[k]);
        }
        CHECK(cur == target);
    }
}

TEST_CASE("parallel enumeration keeps the serial order") {
    const Composition shape{2, 1, 0, 2};
    const Permutation sigma({3, 1, 2, 4});
    const auto serial = enumerate_naf(shape, sigma);
    setenv("PBMAC_MAX_THREADS", "4", 1);
    const auto parallel = enumerate_naf(shape, sigma);
    unsetenv("PBMAC_MAX_THREADS");
    REQUIRE(serial.size() == parallel.size());
    for (size_t k = 0; k < serial.size(); ++k) CHECK(serial[k].rows() == parallel[k].rows());
}
