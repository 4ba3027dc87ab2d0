#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace clusterwp;
using namespace fixtures;

TEST(MutateMatrix, AffineAndA3) {
    EXPECT_EQ(mutate_matrix(ExchangeMatrix{{0, 2}, {-2, 0}}, 0), (ExchangeMatrix{{0, -2}, {2, 0}}));
    EXPECT_EQ(mutate_matrix(ExchangeMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}, 1),
              (ExchangeMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
    ExchangeMatrix b{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}};
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(mutate_matrix(mutate_matrix(b, k), k), b);
    EXPECT_THROW(mutate_matrix(ExchangeMatrix{{0, 1, 1}}, 1), SeedError);
}

TEST(MutateSeed, Sl2Exchange) {
    Seed s = sl2();
    Seed t = mutate_seed(s, 0);
    EXPECT_EQ(t.names()[0], "x'");
    EXPECT_EQ(t.expansions()[0], poly("x^-1*c1*c2 + x^-1", s.initial_vars()));
    EXPECT_EQ(t.expansions()[1], s.expansions()[1]);
    Seed back = mutate_seed(t, 0);
    EXPECT_EQ(back.names(), s.names());
    EXPECT_EQ(back.expansions(), s.expansions());
}

TEST(MutateSeed, AffineChain) {
    Seed s = affine();
    Seed t = mutate_sequence(s, {0, 1});
    EXPECT_EQ(t.names(), (std::vector<std::string>{"x2", "x3"}));
    const auto& v = s.initial_vars();
    EXPECT_EQ(t.expansions()[0], poly("(x1^2 + 1)/x0", v));
    EXPECT_EQ(t.expansions()[1], poly("((x1^2 + 1)^2 + x0^2)/(x0^2*x1)", v));
    Seed u = mutate_seed(s, 1);
    EXPECT_EQ(u.names(), (std::vector<std::string>{"x0", "xm1"}));
}

TEST(MutateSeed, PolygonNamingFlipsDiagonals) {
    Seed s = a3();
    EXPECT_EQ(mutate_seed(s, 0).names()[0], "x24");
    EXPECT_EQ(mutate_seed(s, 1).names()[1], "x35");
    EXPECT_EQ(mutate_seed(s, 2).names()[2], "x46");
}

TEST(SkewSymmetrizer, Examples) {
    for (const Seed& s : {sl2(), a3(), affine(), markov()}) {
        auto d = find_skew_symmetrizer(s.matrix());
        ASSERT_TRUE(std::holds_alternative<std::vector<long>>(d));
        for (long x : std::get<std::vector<long>>(d)) EXPECT_EQ(x, 1);
    }
    auto d = find_skew_symmetrizer(ExchangeMatrix{{0, 1}, {-2, 0}});
    ASSERT_TRUE(std::holds_alternative<std::vector<long>>(d));
    EXPECT_EQ(std::get<std::vector<long>>(d), (std::vector<long>{2, 1}));
    auto bad = find_skew_symmetrizer(ExchangeMatrix{{0, 1}, {1, 0}});
    ASSERT_TRUE(std::holds_alternative<NotSkewSymmetrizable>(bad));
    EXPECT_EQ(std::get<NotSkewSymmetrizable>(bad).i, 0u);
    EXPECT_EQ(std::get<NotSkewSymmetrizable>(bad).j, 1u);
    // Ratios 1:2, 1:3, 1:1 around a triangle are inconsistent.
    auto cyc = find_skew_symmetrizer(ExchangeMatrix{{0, 1, -1}, {-2, 0, 1}, {1, -3, 0}});
    EXPECT_TRUE(std::holds_alternative<NotSkewSymmetrizable>(cyc));
}

TEST(SkewSymmetrizer, SeparateComponentsAreCoprime) {
    auto d = find_skew_symmetrizer(ExchangeMatrix{{0, 2, 0, 0}, {-4, 0, 0, 0}, {0, 0, 0, 3}, {0, 0, -3, 0}});
    ASSERT_TRUE(std::holds_alternative<std::vector<long>>(d));
    EXPECT_EQ(std::get<std::vector<long>>(d), (std::vector<long>{2, 1, 1, 1}));
}

TEST(Acyclicity, CyclesAreClosedWalks) {
    EXPECT_TRUE(is_acyclic(a3().matrix()).acyclic);
    auto markov_result = is_acyclic(markov().matrix());
    EXPECT_FALSE(markov_result.acyclic);
    EXPECT_EQ(markov_result.cycle, (std::vector<std::size_t>{0, 1, 2, 0}));
    auto mu2 = is_acyclic(mutate_matrix(a3().matrix(), 1));
    EXPECT_FALSE(mu2.acyclic);
    EXPECT_EQ(mu2.cycle, (std::vector<std::size_t>{0, 2, 1, 0}));
    EXPECT_TRUE(is_acyclic(sl2().matrix()).acyclic);
}

TEST(FindAcyclicSeed, SearchesBreadthFirst) {
    auto self = find_acyclic_seed(a3(), 10);
    ASSERT_TRUE(self);
    EXPECT_TRUE(self->path.empty());
    auto back = find_acyclic_seed(mutate_seed(a3(), 1), 10);
    ASSERT_TRUE(back);
    EXPECT_EQ(back->path.size(), 1u);
    EXPECT_FALSE(find_acyclic_seed(markov(), 50));
}

TEST(Presentation, Sl2AndAffine) {
    Presentation p = acyclic_presentation(sl2());
    ASSERT_EQ(p.relations.size(), 1u);
    EXPECT_EQ(p.relations[0].polynomial(), poly("x*x' - (c1*c2 + 1)", p.generators));
    EXPECT_EQ(p.frozen, (std::set<std::string>{"c1", "c2"}));

    Presentation a = acyclic_presentation(affine());
    ASSERT_EQ(a.relations.size(), 2u);
    EXPECT_EQ(a.relations[0].polynomial(), poly("x0*x2 - (x1^2 + 1)", a.generators));
    EXPECT_EQ(a.relations[1].polynomial(), poly("x1*xm1 - (x0^2 + 1)", a.generators));

    // The displayed relations x0 x2 - (x1^2+1), x1 x3 - (x2^2+1) come from the cluster {x2, x1}.
    Presentation shifted = acyclic_presentation(mutate_seed(affine(), 0));
    EXPECT_EQ(shifted.relations[0].polynomial(), poly("x2*x0 - (x1^2 + 1)", shifted.generators));
    EXPECT_EQ(shifted.relations[1].polynomial(), poly("x1*x3 - (x2^2 + 1)", shifted.generators));

    EXPECT_THROW(acyclic_presentation(markov()), SeedError);
}

TEST(Explore, A3Census) {
    Exploration e = explore(a3(), 100, 10);
    EXPECT_EQ(e.seeds.size(), 14u);
    EXPECT_EQ(e.variables.size(), 9u);
    EXPECT_FALSE(e.truncated);
    std::set<std::string> names;
    for (const auto& [name, poly] : e.variables) names.insert(name);
    EXPECT_EQ(names, (std::set<std::string>{"x13", "x14", "x15", "x24", "x25", "x26", "x35", "x36", "x46"}));
    const auto v = a3().initial_vars();
    for (const auto& [name, p] : e.variables)
        if (name == "x26") EXPECT_EQ(p, poly("(x13*x14 + x14*x15 + x13 + x15)/(x13*x14*x15)", v));
}

TEST(Explore, Sl2HasTwoClusters) {
    Exploration e = explore(sl2(), 100, 10);
    EXPECT_EQ(e.seeds.size(), 2u);
    EXPECT_FALSE(e.truncated);
    EXPECT_EQ(e.neighbors[0][0], std::optional<std::size_t>(1));
    EXPECT_EQ(e.neighbors[1][0], std::optional<std::size_t>(0));
}

TEST(Explore, AffineTruncatesWithConsecutiveClusters) {
    Exploration e = explore(affine(), 10, 100);
    EXPECT_EQ(e.seeds.size(), 10u);
    EXPECT_TRUE(e.truncated);
    for (const auto& s : e.seeds) {
        auto a = IndexedNaming::index(s.names()[0]);
        auto b = IndexedNaming::index(s.names()[1]);
        ASSERT_TRUE(a && b);
        EXPECT_EQ(std::labs(*a - *b), 1);
    }
}

TEST(Explore, AdmitFilterBoundsTheWindow) {
    auto in_window = [](const Seed& s) {
        for (const auto& n : s.names()) {
            auto k = IndexedNaming::index(n);
            if (!k || *k < -2 || *k > 5) return false;
        }
        return true;
    };
    Exploration e = explore(affine(), 100, 100, in_window);
    EXPECT_EQ(e.seeds.size(), 7u);
    EXPECT_TRUE(e.truncated);
}

TEST(Explore, FindCluster) {
    Exploration e = explore(a3(), 100, 10);
    auto cluster = e.seeds[5].expansions();
    std::reverse(cluster.begin(), cluster.end());
    EXPECT_EQ(e.find_cluster(cluster), std::optional<std::size_t>(5));
}

TEST(ExplorationRelations, PartnersAreNewVariables) {
    Exploration e = explore(a3(), 100, 10);
    Presentation p = exploration_relations(e);
    for (const auto& rel : p.relations) {
        auto support = rel.binomial.support();
        for (std::size_t k : support) {
            EXPECT_NE(p.generators->name(k), rel.var);
            EXPECT_NE(p.generators->name(k), rel.partner);
        }
    }
    // The 21 flips collapse to one Ptolemy relation per quadrilateral of the hexagon.
    EXPECT_EQ(p.relations.size(), 15u);
}

TEST(Seed, ValidationMessagesNamePairs) {
    try {
        Seed(ExchangeMatrix{{0, 1}, {1, 0}}, {"a", "b"});
        FAIL();
    } catch (const SeedError& e) {
        EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos);
    }
    EXPECT_THROW(Seed(ExchangeMatrix{{0, 1}, {-1, 0}}, {"a"}), SeedError);
}
