#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "degseq/realize.hpp"

using namespace degseq;

TEST(SimpleGraph, RejectsLoopsAndDuplicates) {
    SimpleGraph g(3);
    g.add_edge(0, 1);
    EXPECT_THROW(g.add_edge(1, 0), std::invalid_argument);
    EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Realize, Triangle) {
    const auto g = realize(DegreeSequence{2, 2, 2});
    const std::vector<SimpleGraph::Edge> want{{0, 1}, {0, 2}, {1, 2}};
    EXPECT_EQ(g.edges(), want);
}

TEST(Realize, Star) {
    const auto g = realize(DegreeSequence{3, 1, 1, 1});
    const std::vector<SimpleGraph::Edge> want{{0, 1}, {0, 2}, {0, 3}};
    EXPECT_EQ(g.edges(), want);
}

TEST(Realize, PathDegrees) {
    const DegreeSequence d{2, 2, 1, 1};
    const auto g = realize(d);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_EQ(g.degrees(), d.vector());
}

TEST(Realize, NotGraphicCarriesIndex) {
    try {
        realize(DegreeSequence{1, 1, 1});
        FAIL();
    } catch (const NotGraphic& e) {
        EXPECT_EQ(e.failing_t(), 0u);
        EXPECT_STREQ(e.what(), "odd sum");
    }
    try {
        realize(DegreeSequence{3, 3, 1, 1});
        FAIL();
    } catch (const NotGraphic& e) {
        EXPECT_EQ(e.failing_t(), 2u);
    }
}

TEST(Realize, EmptyGraph) {
    const auto g = realize(DegreeSequence{0, 0, 0});
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Realize, DegreesMatchOnRandomGraphs) {
    // Degree sequences of random graphs are graphic by construction.
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = 1 + rng() % 60;
        std::vector<degree_t> d(n, 0);
        const auto p = rng() % 100;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng() % 100 < p) {
                    ++d[u];
                    ++d[v];
                }
        const auto g = realize(DegreeSequence(d));
        ASSERT_EQ(g.degrees(), d);
    }
}
