#include <doctest.h>

#include "ecctree/constructors.hpp"
#include "ecctree/majorization.hpp"
#include "ecctree/metrics.hpp"
#include "ecctree/oracle.hpp"
#include "test_util.hpp"

using namespace ecc;
using ecc::test::code_of;

TEST_CASE("majorization by prefix sums") {
    CHECK(majorizes(DegreeSequence({3, 2, 1, 1, 1}), DegreeSequence({2, 2, 2, 1, 1})));
    CHECK(majorizes(DegreeSequence({4, 1, 1, 1, 1}), DegreeSequence({3, 2, 1, 1, 1})));
    CHECK_FALSE(majorizes(DegreeSequence({2, 2, 2, 1, 1}), DegreeSequence({3, 2, 1, 1, 1})));
    CHECK(code_of([] {
              majorizes(DegreeSequence({2, 1, 1}), DegreeSequence({2, 2, 1, 1}));
          }) == Errc::bad_parameter);
}

TEST_CASE("majorization is a partial order on fixed-length tree sequences") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + trial % 7;
        DegreeSequence a(ecc::test::random_degree_sequence(rng, n));
        DegreeSequence b(ecc::test::random_degree_sequence(rng, n));
        DegreeSequence c(ecc::test::random_degree_sequence(rng, n));
        CHECK(majorizes(a, a)); // reflexive
        if (majorizes(a, b) && majorizes(b, a)) CHECK(a == b);
        if (majorizes(a, b) && majorizes(b, c)) CHECK(majorizes(a, c));
    }
}

TEST_CASE("refinement chains have the two-entry unit-step structure") {
    DegreeSequence from({2, 2, 2, 1, 1});
    DegreeSequence to({4, 1, 1, 1, 1});
    MajorizationChain chain = refinement_chain(from, to);
    REQUIRE(chain.steps.size() >= 3); // at least two steps
    CHECK(chain.steps.front() == std::vector<int>{2, 2, 2, 1, 1});
    CHECK(chain.steps.back() == std::vector<int>{4, 1, 1, 1, 1});
    CHECK(chain.step_edits.size() == chain.steps.size() - 1);
    for (size_t s = 0; s + 1 < chain.steps.size(); ++s) {
        auto [j, k] = chain.step_edits[s];
        CHECK(j < k);
        for (size_t p = 0; p < chain.steps[s].size(); ++p) {
            int delta = chain.steps[s + 1][p] - chain.steps[s][p];
            if (p == static_cast<size_t>(j))
                CHECK(delta == 1);
            else if (p == static_cast<size_t>(k))
                CHECK(delta == -1);
            else
                CHECK(delta == 0);
        }
        // each intermediate is valid, non-increasing without rearrangement,
        // and majorized by its successor
        CHECK(majorizes(DegreeSequence(chain.steps[s + 1]), DegreeSequence(chain.steps[s])));
        for (size_t p = 0; p + 1 < chain.steps[s].size(); ++p)
            CHECK(chain.steps[s][p] >= chain.steps[s][p + 1]);
    }

    SUBCASE("identical endpoints give a single-element chain") {
        MajorizationChain trivial = refinement_chain(from, from);
        CHECK(trivial.steps.size() == 1);
        CHECK(trivial.step_edits.empty());
    }

    SUBCASE("not-majorized pairs are rejected") {
        CHECK(code_of([&] { refinement_chain(to, from); }) == Errc::bad_parameter);
    }
}

TEST_CASE("chain length is bounded by the prefix-sum deficit") {
    std::mt19937 rng(17);
    int built = 0;
    for (int trial = 0; trial < 300 && built < 60; ++trial) {
        int n = 4 + trial % 6;
        DegreeSequence a(ecc::test::random_degree_sequence(rng, n));
        DegreeSequence b(ecc::test::random_degree_sequence(rng, n));
        if (!majorizes(b, a)) continue;
        ++built;
        MajorizationChain chain = refinement_chain(a, b);
        long long deficit = 0, prefix_a = 0, prefix_b = 0;
        for (int i = 0; i < a.n(); ++i) {
            prefix_a += a[i];
            prefix_b += b[i];
            deficit += prefix_b - prefix_a;
        }
        CHECK(static_cast<long long>(chain.steps.size()) - 1 <= deficit);
    }
    CHECK(built > 0);
}

TEST_CASE("greedy-tree totals are monotone under majorization") {
    GreedyEccComparison wide =
        compare_greedy_ecc(DegreeSequence({2, 2, 2, 1, 1}), DegreeSequence({4, 1, 1, 1, 1}));
    CHECK(wide.ecc_from == 16);
    CHECK(wide.ecc_to == 9);

    GreedyEccComparison narrow =
        compare_greedy_ecc(DegreeSequence({2, 2, 2, 1, 1}), DegreeSequence({3, 2, 1, 1, 1}));
    CHECK(narrow.ecc_from == 16);
    CHECK(narrow.ecc_to == 13);

    GreedyEccComparison same =
        compare_greedy_ecc(DegreeSequence({3, 2, 1, 1, 1}), DegreeSequence({3, 2, 1, 1, 1}));
    CHECK(same.ecc_from == same.ecc_to);

    CHECK(code_of([] {
              compare_greedy_ecc(DegreeSequence({4, 1, 1, 1, 1}), DegreeSequence({2, 2, 2, 1, 1}));
          }) == Errc::bad_parameter);

    SUBCASE("stepwise along every chain for every pair up to n=8") {
        for (int n = 2; n <= 8; ++n) {
            std::vector<DegreeSequence> sequences = all_degree_sequences(n);
            for (const DegreeSequence& lower : sequences)
                for (const DegreeSequence& upper : sequences) {
                    if (!majorizes(upper, lower)) continue;
                    GreedyEccComparison cmp = compare_greedy_ecc(lower, upper);
                    CHECK(cmp.ecc_from >= cmp.ecc_to);
                    for (size_t s = 0; s + 1 < cmp.chain_ecc.size(); ++s)
                        CHECK(cmp.chain_ecc[s] >= cmp.chain_ecc[s + 1]);
                }
        }
    }
}

TEST_CASE("star-like sequences minimize Ecc among trees with a fixed leaf count") {
    // (l, 2, ..., 2, 1, ..., 1) majorizes every other sequence with exactly
    // l leaves, so its greedy tree has the smallest total eccentricity.
    EnumerationCaps caps;
    for (int n = 5; n <= 9; ++n) {
        for (int leaves = 2; leaves <= n - 1; ++leaves) {
            std::vector<int> star_like{leaves};
            for (int i = 0; i < n - leaves - 1; ++i) star_like.push_back(2);
            for (int i = 0; i < leaves; ++i) star_like.push_back(1);
            if (leaves == 2) star_like[0] = 2; // the path
            DegreeSequence reference(star_like);
            long long reference_ecc = ecc_profile(greedy_tree(reference).tree).total;

            long long best = LLONG_MAX;
            for (const DegreeSequence& ds : all_degree_sequences(n)) {
                int ones = 0;
                for (int d : ds.degrees()) ones += d == 1;
                if (ones != leaves) continue;
                SearchReport report = extremal_search(TreeClassSpec::degree_class(ds),
                                                      {Objective::Kind::total_ecc, 0}, {});
                best = std::min(best,
                                static_cast<long long>(report.min_value.num()));
            }
            CHECK(best == reference_ecc);
        }
    }
}

TEST_CASE("chain serialization carries steps, edits and totals") {
    GreedyEccComparison cmp =
        compare_greedy_ecc(DegreeSequence({2, 2, 2, 1, 1}), DegreeSequence({4, 1, 1, 1, 1}));
    std::string json = to_json(cmp);
    CHECK(json.find("\"steps\":[[2,2,2,1,1]") != std::string::npos);
    CHECK(json.find("\"edits\":[[0,") != std::string::npos);
    CHECK(json.find("\"ecc\":[16,") != std::string::npos);
}
