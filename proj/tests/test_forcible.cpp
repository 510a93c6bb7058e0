#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "degseq/forcible.hpp"
#include "degseq/oracle.hpp"
#include "degseq/potential.hpp"

using namespace degseq;

TEST(BetaContext, FixedBoxHasZeroBeta) {
    for (const auto& inst : enumerate_grid(3, 4)) {
        if (!inst.is_fixed())
            continue;
        for (std::size_t t = 1; t <= inst.size(); ++t)
            ASSERT_EQ(beta_context(inst, t).beta, 0);
    }
}

TEST(BetaContext, UnitBoxAtOne) {
    const auto ctx = beta_context(IntervalInstance({0, 0, 0}, {1, 1, 1}), 1);
    EXPECT_EQ(ctx.rho, 1);
    EXPECT_EQ(ctx.Jstar, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_TRUE(ctx.I2.empty());
    EXPECT_EQ(ctx.I3, (std::vector<std::size_t>{1, 2}));
    // I2 empty, 1 + 0 + 0 odd, I2 and J* disjoint.
    EXPECT_EQ(ctx.beta, 1);
    EXPECT_EQ(ctx.slack(), 0);
}

TEST(BetaContext, EvenMixedSumAtTwo) {
    const auto ctx = beta_context(IntervalInstance({1, 1, 1, 1}, {3, 3, 3, 3}), 2);
    EXPECT_TRUE(ctx.I2.empty());
    EXPECT_EQ(ctx.beta, 0); // 3 + 3 + 1 + 1 even
}

TEST(BetaContext, PartitionOfSuffix) {
    InstanceGenConfig cfg{1, 10, 8, {}, 23};
    for (const auto& inst : gen_instances(cfg, 300)) {
        for (std::size_t t = 1; t <= inst.size(); ++t) {
            const auto ctx = beta_context(inst, t);
            std::vector<std::size_t> all = ctx.I2;
            all.insert(all.end(), ctx.I3.begin(), ctx.I3.end());
            std::sort(all.begin(), all.end());
            std::vector<std::size_t> want(inst.size() - t);
            std::iota(want.begin(), want.end(), t);
            ASSERT_EQ(all, want);
            ASSERT_TRUE(std::find(ctx.Jstar.begin(), ctx.Jstar.end(), t - 1) != ctx.Jstar.end());
        }
    }
    EXPECT_THROW(beta_context(IntervalInstance({0}, {1}), 2), std::out_of_range);
}

TEST(CheckForcible, Examples) {
    EXPECT_EQ(check_forcible(IntervalInstance({0, 0, 0}, {1, 1, 1})).decision, Decision::yes);
    const auto no = check_forcible(IntervalInstance({1, 1, 1, 1}, {3, 3, 3, 3}));
    EXPECT_EQ(no.decision, Decision::no);
    ASSERT_TRUE(no.failing_t.has_value());
    EXPECT_EQ(check_forcible(IntervalInstance({2, 2, 2}, {2, 2, 2})).decision, Decision::yes);
    EXPECT_EQ(check_forcible(IntervalInstance({1, 1, 1}, {1, 1, 1})).decision, Decision::vacuous_yes);
}

TEST(CheckForcible, SmallestFailingTAndExplain) {
    const IntervalInstance inst({3, 3, 1, 1}, {3, 3, 1, 1});
    const auto quick = check_forcible(inst);
    ForcibleOptions opts;
    opts.explain = true;
    const auto full = check_forcible(inst, opts);
    EXPECT_EQ(quick.failing_t, 2u);
    EXPECT_EQ(full.failing_t, 2u);
    ASSERT_EQ(full.slack.size(), 4u);
    EXPECT_EQ(full.slack[1].slack, -2);
    for (const auto& s : full.slack)
        EXPECT_EQ(s.slack, eg_slack(DegreeSequence{3, 3, 1, 1}, s.t));
}

TEST(CheckForcible, ObserverSeesEveryView) {
    std::vector<std::size_t> seen;
    ForcibleOptions opts;
    opts.explain = true;
    opts.on_view = [&](const OrderedView& v) { seen.push_back(v.t()); };
    check_forcible(IntervalInstance({0, 1, 2, 0}, {3, 1, 2, 2}), opts);
    EXPECT_EQ(seen, (std::vector<std::size_t>{1, 2, 3, 4}));
}

TEST(CheckForcible, MatchesBruteForceOnGrid) {
    for (const auto& inst : enumerate_grid(3, 3))
        ASSERT_EQ(check_forcible(inst).accepted(), brute_force_forcible(inst));
}

TEST(CheckForcible, MatchesBruteForceOnRandomInstances) {
    InstanceGenConfig cfg{1, 6, 5, {}, 2024};
    for (const auto& inst : gen_instances(cfg, 3000))
        ASSERT_EQ(check_forcible(inst).accepted(), brute_force_forcible(inst));
}

TEST(CheckForcible, FixedBoxReducesToGraphicTest) {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 2000; ++iter) {
        std::vector<degree_t> d(1 + rng() % 20);
        for (auto& x : d)
            x = static_cast<degree_t>(rng() % 12);
        const auto inst = IntervalInstance::point(d);
        const auto v = check_forcible(inst);
        if (DegreeSequence(d).even_sum())
            ASSERT_EQ(v.decision, is_graphic(d) ? Decision::yes : Decision::no);
        else
            ASSERT_EQ(v.decision, Decision::vacuous_yes);
    }
}

TEST(CheckForcible, PermutationInvariant) {
    std::mt19937_64 rng(41);
    InstanceGenConfig cfg{2, 9, 7, {}, 43};
    for (const auto& inst : gen_instances(cfg, 500)) {
        std::vector<std::size_t> p(inst.size());
        std::iota(p.begin(), p.end(), std::size_t{0});
        std::shuffle(p.begin(), p.end(), rng);
        std::vector<degree_t> a, b;
        for (auto i : p) {
            a.push_back(inst.a(i));
            b.push_back(inst.b(i));
        }
        const IntervalInstance shuffled(a, b);
        ASSERT_EQ(check_forcible(shuffled).decision, check_forcible(inst).decision);
        ASSERT_EQ(check_potential(shuffled).decision, check_potential(inst).decision);
    }
}

TEST(CheckForcible, AnyGoodOrderOtGivesTheSameSlack) {
    // Every permutation satisfying the O(t) conditions, not just the canonical one.
    for (const auto& inst : enumerate_grid(3, 3)) {
        for (std::size_t t = 1; t <= inst.size(); ++t) {
            const auto canonical = beta_context(inst, t);
            std::vector<std::size_t> p(inst.size());
            std::iota(p.begin(), p.end(), std::size_t{0});
            do {
                OrderedView v(inst, p, OrderKind::O, t);
                if (!is_good_order_Ot(v))
                    continue;
                const auto ctx = beta_context(v, inst.is_fixed());
                ASSERT_EQ(ctx.slack(), canonical.slack());
                ASSERT_EQ(ctx.beta, canonical.beta);
            } while (std::next_permutation(p.begin(), p.end()));
        }
    }
}

TEST(FindWitness, Examples) {
    const auto w = find_witness(IntervalInstance({3, 3, 1, 1}, {3, 3, 1, 1}), 2);
    EXPECT_EQ(w.sequence, (std::vector<degree_t>{3, 3, 1, 1}));
    EXPECT_FALSE(w.exhaustive);

    const IntervalInstance box({1, 1, 1, 1}, {3, 3, 3, 3});
    const auto v = check_forcible(box);
    const auto w2 = find_witness(box, *v.failing_t);
    EXPECT_TRUE(box.contains(w2.sequence));
    EXPECT_TRUE(DegreeSequence(w2.sequence).even_sum());
    EXPECT_FALSE(is_graphic(w2.sequence));
}

TEST(FindWitness, ForcibleBoxHasNone) {
    EXPECT_THROW(find_witness(IntervalInstance({0, 0, 0}, {1, 1, 1}), 1), WitnessNotFound);
    // (2,2,0) lies in this box, so it is not forcible and a witness exists.
    const IntervalInstance twos({0, 0, 0}, {2, 2, 2});
    EXPECT_EQ(check_forcible(twos).decision, Decision::no);
    EXPECT_FALSE(brute_force_forcible(twos));
    EXPECT_THROW(find_witness(IntervalInstance({0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1, 1, 1}), 1, 10),
                 WitnessNotFound);
}

TEST(FindWitness, ValidWithoutFallbackOnNoInstances) {
    std::size_t no_count = 0;
    auto check = [&](const IntervalInstance& inst) {
        ForcibleOptions opts;
        opts.witness = true;
        const auto v = check_forcible(inst, opts);
        if (v.decision != Decision::no)
            return;
        ++no_count;
        ASSERT_TRUE(v.witness.has_value());
        EXPECT_TRUE(inst.contains(*v.witness));
        EXPECT_TRUE(DegreeSequence(*v.witness).even_sum());
        EXPECT_FALSE(is_graphic(*v.witness));
        EXPECT_FALSE(v.witness_exhaustive);
    };
    for (const auto& inst : enumerate_grid(3, 3))
        check(inst);
    InstanceGenConfig cfg{1, 8, 7, {}, 77};
    for (const auto& inst : gen_instances(cfg, 3000))
        check(inst);
    EXPECT_GT(no_count, 500u);
}
