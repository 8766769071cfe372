#include <doctest.h>

#include "ecctree/bounds.hpp"
#include "ecctree/constructors.hpp"
#include "ecctree/metrics.hpp"
#include "ecctree/oracle.hpp"
#include "test_util.hpp"

using namespace ecc;
using ecc::test::code_of;

TEST_CASE("stars and paths") {
    CHECK(degree_sequence_of(star(5)).str() == "4,1,1,1,1");
    CHECK(degree_sequence_of(path(5)).str() == "2,2,2,1,1");
    CHECK(canonical_form(star(2)) == canonical_form(path(2)));
    CHECK(star(1).n() == 1);
    CHECK(code_of([] { star(0); }) == Errc::bad_parameter);
}

TEST_CASE("minimum total/center family (two-center path with pendants)") {
    ExtremalWitness n9 = extremal_min_total_over_center(9, 3);
    CHECK(ecc_profile(n9.tree).total == 36);
    CHECK(ratio(RatioKind::total_over_center, n9.tree, *n9.v) == Rational(12));

    ExtremalWitness n4 = extremal_min_total_over_center(4, 2);
    CHECK(canonical_form(n4.tree) == canonical_form(path(4)));
    CHECK(ratio(RatioKind::total_over_center, n4.tree, *n4.v) == Rational(5));

    // the first-derivative case split: x=3 beats x=4 at n=9
    ExtremalWitness n9x4 = extremal_min_total_over_center(9, 4);
    CHECK(ratio(RatioKind::total_over_center, n9.tree, *n9.v) <=
          ratio(RatioKind::total_over_center, n9x4.tree, *n9x4.v));

    CHECK(code_of([] { extremal_min_total_over_center(3, 2); }) == Errc::bad_parameter);
    CHECK(code_of([] { extremal_min_total_over_center(9, 5); }) == Errc::bad_parameter);
    CHECK(code_of([] { extremal_min_total_over_center(9, 1); }) == Errc::bad_parameter);

    SUBCASE("the longest path really has 2x vertices") {
        for (int n = 4; n <= 14; ++n)
            for (int x = 2; 2 * x <= n; ++x) {
                ExtremalWitness w = extremal_min_total_over_center(n, x);
                CHECK(ecc_profile(w.tree).diameter == 2 * x - 1);
            }
    }
}

TEST_CASE("maximum total/leaf family (pendant on the middle of an odd path)") {
    ExtremalWitness n8 = extremal_max_total_over_leaf(8, 4);
    EccProfile p8 = ecc_profile(n8.tree);
    CHECK(p8.total == 37);
    CHECK(p8.ecc[static_cast<size_t>(*n8.u)] == 4);
    CHECK(ratio(RatioKind::total_over_leaf, n8.tree, *n8.u) == Rational::of(37, 4));

    // one extra pendant lands at eccentricity 2x-2 = 6
    ExtremalWitness n9 = extremal_max_total_over_leaf(9, 4);
    CHECK(ratio(RatioKind::total_over_leaf, n9.tree, *n9.u) == Rational::of(43, 4));

    CHECK(code_of([] { extremal_max_total_over_leaf(7, 3); }) == Errc::bad_parameter);
    CHECK(code_of([] { extremal_max_total_over_leaf(8, 5); }) == Errc::bad_parameter);
}

TEST_CASE("minimum total/leaf family (even path, pendants on its middle)") {
    ExtremalWitness n5 = extremal_min_total_over_leaf(5, 4);
    CHECK(canonical_form(n5.tree) == canonical_form(path(5)));
    CHECK(ratio(RatioKind::total_over_leaf, n5.tree, *n5.u) == Rational(4));

    ExtremalWitness n6 = extremal_min_total_over_leaf(6, 4);
    CHECK(ecc_profile(n6.tree).total == 19);
    CHECK(ratio(RatioKind::total_over_leaf, n6.tree, *n6.u) == Rational::of(19, 4));

    CHECK(code_of([] { extremal_min_total_over_leaf(6, 3); }) == Errc::bad_parameter); // odd x
    CHECK(code_of([] { extremal_min_total_over_leaf(6, 6); }) == Errc::bad_parameter); // x > n-1
}

TEST_CASE("minimum leaf/center family, both variants") {
    ExtremalWitness v1 = extremal_min_leaf_over_center(5, 1);
    EccProfile p = ecc_profile(v1.tree);
    CHECK(p.ecc[static_cast<size_t>(*v1.u)] == 3);
    CHECK(p.radius == 2);
    CHECK(ratio(RatioKind::leaf_over_center, v1.tree, *v1.u) == Rational::of(3, 2));

    ExtremalWitness v1n6 = extremal_min_leaf_over_center(6, 1);
    CHECK(ratio(RatioKind::leaf_over_center, v1n6.tree, *v1n6.u) == Rational::of(3, 2));

    ExtremalWitness v2 = extremal_min_leaf_over_center(6, 2, 2);
    CHECK(ratio(RatioKind::leaf_over_center, v2.tree, *v2.u) == Rational::of(3, 2));
    CHECK(v2.w.has_value());

    CHECK(code_of([] { extremal_min_leaf_over_center(7, 2, 2); }) == Errc::bad_parameter);
    CHECK(code_of([] { extremal_min_leaf_over_center(6, 2); }) == Errc::bad_parameter);
    CHECK(code_of([] { extremal_min_leaf_over_center(6, 2, 4); }) == Errc::bad_parameter);
    CHECK(code_of([] { extremal_min_leaf_over_center(6, 3); }) == Errc::bad_parameter);

    SUBCASE("every variant-2 attachment point achieves the bound") {
        for (int n = 6; n <= 12; n += 2)
            for (int attach = 2; attach <= n - 3; ++attach) {
                ExtremalWitness w = extremal_min_leaf_over_center(n, 2, attach);
                CHECK(ratio(RatioKind::leaf_over_center, w.tree, *w.u) ==
                      *leaf_over_center_bounds(n).min);
            }
    }
}

TEST_CASE("maximum leaf/leaf family") {
    ExtremalWitness n6 = extremal_max_leaf_over_leaf(6);
    EccProfile p6 = ecc_profile(n6.tree);
    CHECK(p6.ecc[static_cast<size_t>(*n6.u)] == 4);
    CHECK(p6.ecc[static_cast<size_t>(*n6.w)] == 3);
    CHECK(ratio(RatioKind::leaf_over_leaf, n6.tree, *n6.u, n6.w) == Rational::of(4, 3));

    ExtremalWitness n7 = extremal_max_leaf_over_leaf(7, 2);
    CHECK(ratio(RatioKind::leaf_over_leaf, n7.tree, *n7.u, n7.w) == Rational::of(4, 3));

    ExtremalWitness n4 = extremal_max_leaf_over_leaf(4);
    CHECK(canonical_form(n4.tree) == canonical_form(star(4)));
    CHECK(ratio(RatioKind::leaf_over_leaf, n4.tree, *n4.u, n4.w) == Rational(1));

    CHECK(code_of([] { extremal_max_leaf_over_leaf(6, 2); }) == Errc::bad_parameter);
    CHECK(code_of([] { extremal_max_leaf_over_leaf(7); }) == Errc::bad_parameter);
    CHECK(code_of([] { extremal_max_leaf_over_leaf(7, 5); }) == Errc::bad_parameter);
}

TEST_CASE("greedy caterpillar") {
    DegreeSequence ds({3, 2, 2, 1, 1, 1});
    Tree greedy = greedy_caterpillar(ds);
    CHECK(degree_sequence_of(greedy) == ds);
    CHECK(ecc_profile(greedy).total == 20);
    // spine ends get the big degrees: two pendants at one end, one at the other
    CHECK(greedy.degree(0) == 3);
    CHECK(greedy.degree(1) == 2);
    CHECK(greedy.degree(2) == 2);

    // the center-heavy assignment of the same degrees scores lower
    Tree center_heavy = Tree::from_edges(6, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
    CHECK(degree_sequence_of(center_heavy) == ds);
    CHECK(ecc_profile(center_heavy).total == 19);

    CHECK(canonical_form(greedy_caterpillar(DegreeSequence({4, 1, 1, 1, 1}))) ==
          canonical_form(star(5)));

    SUBCASE("every valid spine assignment shares the maximal total") {
        std::vector<Tree> all = greedy_caterpillar_assignments(ds);
        CHECK(all.size() >= 2);
        for (const Tree& t : all) {
            CHECK(degree_sequence_of(t) == ds);
            CHECK(ecc_profile(t).total == 20);
        }
    }
}

TEST_CASE("the two published caterpillars for (7,6,5,4,4,1,...,1) tie") {
    std::vector<int> degrees{7, 6, 5, 4, 4};
    while (degrees.size() < 23) degrees.push_back(1);
    DegreeSequence ds(degrees);
    Tree greedy = greedy_caterpillar(ds);
    CHECK(greedy.n() == 23);
    CHECK(degree_sequence_of(greedy) == ds);

    // hand-built spine assignments (6,5,4,4,7) and (7,5,4,4,6)
    auto build = [](const std::vector<int>& spine) {
        std::vector<Edge> edges;
        for (Vertex v = 0; v + 1 < 5; ++v) edges.emplace_back(v, v + 1);
        Vertex next = 5;
        for (int i = 0; i < 5; ++i) {
            int pendants = spine[static_cast<size_t>(i)] - ((i == 0 || i == 4) ? 1 : 2);
            for (int j = 0; j < pendants; ++j) edges.emplace_back(i, next++);
        }
        return Tree::from_edges(23, edges);
    };
    Tree left = build({6, 5, 4, 4, 7});
    Tree right = build({7, 5, 4, 4, 6});
    CHECK(ecc_profile(left).total == ecc_profile(right).total);
    CHECK(ecc_profile(greedy).total == ecc_profile(left).total);
    CHECK(canonical_form(left) != canonical_form(right)); // non-isomorphic pair
    CHECK(canonical_form(greedy) == canonical_form(right));
}

TEST_CASE("level-greedy construction") {
    RootedTree p3 = level_greedy(LevelDegreeSequence({{2}, {1, 1}}));
    CHECK(canonical_form(p3.tree) == canonical_form(path(3)));
    CHECK(p3.height_of[static_cast<size_t>(p3.root)] == 0);
    CHECK(p3.height() == 1);

    RootedTree s6 = level_greedy(LevelDegreeSequence({{5}, {1, 1, 1, 1, 1}}));
    CHECK(canonical_form(s6.tree) == canonical_form(star(6)));

    SUBCASE("matches the published 21-vertex level-greedy tree") {
        LevelDegreeSequence lds(
            {{3}, {5, 3, 2}, {3, 3, 3, 2, 2, 1, 1}, {2, 2, 1, 1, 1, 1, 1, 1}, {1, 1}});
        RootedTree built = level_greedy(lds);
        CHECK(built.n() == 21);
        CHECK(level_degree_sequence_of(built) == lds);
        Tree reference = Tree::from_edges(
            21, {{0, 1},  {0, 2},  {0, 3},  {1, 4},  {1, 5},  {1, 6},  {1, 7},
                 {2, 8},  {2, 9},  {3, 10}, {4, 11}, {4, 12}, {5, 13}, {5, 14},
                 {6, 15}, {6, 16}, {7, 17}, {8, 18}, {11, 19}, {12, 20}});
        CHECK(rooted_canonical_form(built.tree, built.root) == rooted_canonical_form(reference, 0));
    }

    SUBCASE("level degrees, read left to right, are non-increasing") {
        LevelDegreeSequence lds({{3}, {3, 2, 1}, {2, 1, 1}, {1}});
        RootedTree built = level_greedy(lds);
        for (const auto& level : built.levels()) {
            for (size_t j = 0; j + 1 < level.size(); ++j)
                CHECK(built.tree.degree(level[j]) >= built.tree.degree(level[j + 1]));
        }
        CHECK(level_degree_sequence_of(built) == lds);
    }
}

TEST_CASE("greedy tree") {
    RootedTree g = greedy_tree(DegreeSequence({3, 3, 2, 1, 1, 1, 1}));
    CHECK(ecc_profile(g.tree).total == 23);
    CHECK(g.tree.degree(g.root) == 3);

    RootedTree path_like = greedy_tree(DegreeSequence({2, 2, 2, 1, 1}));
    CHECK(canonical_form(path_like.tree) == canonical_form(path(5)));
    EccProfile pp = ecc_profile(path_like.tree);
    CHECK(std::binary_search(pp.center.begin(), pp.center.end(), path_like.root));

    SUBCASE("the published 27-vertex degree sequence round-trips") {
        std::vector<int> degrees{4, 4, 4, 3, 3, 3, 3, 3, 3, 3, 2, 2};
        while (degrees.size() < 27) degrees.push_back(1);
        DegreeSequence ds(degrees);
        RootedTree built = greedy_tree(ds);
        CHECK(built.n() == 27);
        CHECK(degree_sequence_of(built.tree) == ds);
    }
}

TEST_CASE("constructor outputs reproduce their inputs across all small sequences") {
    for (int n = 3; n <= 8; ++n) {
        for (const DegreeSequence& ds : all_degree_sequences(n)) {
            Tree caterpillar = greedy_caterpillar(ds);
            CHECK(degree_sequence_of(caterpillar) == ds);

            RootedTree greedy = greedy_tree(ds);
            CHECK(degree_sequence_of(greedy.tree) == ds);

            // greedy trees are level-greedy: rebuilding from their level
            // sequence gives the same rooted tree
            LevelDegreeSequence lds = level_degree_sequence_of(greedy);
            RootedTree rebuilt = level_greedy(lds);
            CHECK(rooted_canonical_form(greedy.tree, greedy.root) ==
                  rooted_canonical_form(rebuilt.tree, rebuilt.root));

            // heights monotone versus degrees among non-leaves
            for (Vertex u = 0; u < greedy.n(); ++u)
                for (Vertex v = 0; v < greedy.n(); ++v)
                    if (greedy.tree.degree(u) > 1 && greedy.tree.degree(v) > 1 &&
                        greedy.height_of[static_cast<size_t>(u)] <
                            greedy.height_of[static_cast<size_t>(v)])
                        CHECK(greedy.tree.degree(u) >= greedy.tree.degree(v));

            // every valid caterpillar assignment ties on total eccentricity
            if (ds.internal_count() <= 6) {
                long long expected = ecc_profile(caterpillar).total;
                for (const Tree& t : greedy_caterpillar_assignments(ds))
                    CHECK(ecc_profile(t).total == expected);
            }
        }
    }
}
