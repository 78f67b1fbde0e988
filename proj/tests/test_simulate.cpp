#include <random>

#include <gtest/gtest.h>

#include "burst/errors.hpp"
#include "burst/simulate.hpp"

using namespace burst;

namespace {

const PrimeField F2(2), F3(3);

} // namespace

TEST(Prng, MersenneTwisterReferenceVector) {
    // Published reference value: the 10000th output of a default-seeded
    // (5489) std::mt19937_64.
    std::mt19937_64 rng;
    rng.discard(9999);
    EXPECT_EQ(rng(), 9981545732273789042ull);
    std::mt19937_64 first(5489);
    EXPECT_EQ(first(), 14514284786278117030ull);
}

TEST(TrialSource, FollowsTheDocumentedDrawOrder) {
    const Code code = generator_recursive(3, 7, F3);
    const ChannelModel channel{RandomLength{4}, 1234};
    TrialSource source(code, channel);
    std::mt19937_64 reference(1234);
    for (int trial = 0; trial < 50; ++trial) {
        const auto burst = source.next_burst();
        EXPECT_EQ(burst.start, 1 + reference() % 7);
        EXPECT_EQ(burst.length, reference() % 5);
        const auto message = source.next_message();
        for (const auto& symbol : message) EXPECT_EQ(symbol.value(), reference() % 3);
    }
}

TEST(TrialSource, BurstsRespectTheChannelBounds) {
    const Code code = generator_explicit(F2, 4, 11);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        TrialSource uniform(code, {UniformStart{7}, seed});
        TrialSource random(code, {RandomLength{7}, seed});
        for (int i = 0; i < 100; ++i) {
            const auto u = uniform.next_burst();
            EXPECT_GE(u.start, 1u);
            EXPECT_LE(u.start, 11u);
            EXPECT_EQ(u.length, 7u);
            const auto r = random.next_burst();
            EXPECT_LE(r.length, 7u);
            EXPECT_GE(r.start, 1u);
            EXPECT_LE(r.start, 11u);
        }
    }
}

TEST(Simulation, SingleTrialWithoutErasures) {
    const Code code = generator_recursive(2, 4, F2);
    const auto report = run_simulation(code, {FixedBurst{1, 0}, 9}, 1);
    EXPECT_EQ(report.trials, 1u);
    EXPECT_EQ(report.successes, 1u);
    EXPECT_EQ(report.failures, 0u);
}

TEST(Simulation, MaximalBurstsAlwaysDecode) {
    const Code code = generator_recursive(3, 7, F2);
    const auto report = run_simulation(code, {UniformStart{4}, 2026}, 700);
    EXPECT_EQ(report.trials, 700u);
    EXPECT_EQ(report.successes, 700u);
    EXPECT_EQ(report.failures, 0u);
    std::uint64_t total = 0;
    for (const auto& s : report.per_start) total += s.trials;
    EXPECT_EQ(total, 700u);
}

TEST(Simulation, OverlongBurstsAreCountedNotThrown) {
    const Code code = generator_recursive(3, 7, F2);
    const auto report = run_simulation(code, {UniformStart{5}, 1}, 50);
    EXPECT_EQ(report.failures, 50u);
    EXPECT_EQ(report.successes + report.failures, report.trials);
    EXPECT_EQ(report.failure_kinds.at("BurstTooLong"), 50u);
}

TEST(Simulation, RandomLengthChannel) {
    const Code code = generator_explicit(F3, 4, 9);
    const auto report = run_simulation(code, {RandomLength{5}, 77}, 400);
    EXPECT_EQ(report.successes, 400u);
}

TEST(Simulation, DeterministicAcrossRunsAndThreadCounts) {
    const Code code = generator_explicit(F3, 3, 8);
    const ChannelModel channel{UniformStart{6}, 555};
    const auto one = to_json(run_simulation(code, channel, 300, {1}), code, channel).dump();
    const auto again = to_json(run_simulation(code, channel, 300, {1}), code, channel).dump();
    const auto threaded = to_json(run_simulation(code, channel, 300, {4}), code, channel).dump();
    EXPECT_EQ(one, again);
    EXPECT_EQ(one, threaded);

    const ChannelModel overlong{UniformStart{6}, 555};
    const Code tight = generator_explicit(F3, 3, 7);
    EXPECT_EQ(to_json(run_simulation(tight, overlong, 100, {1}), tight, overlong).dump(),
              to_json(run_simulation(tight, overlong, 100, {3}), tight, overlong).dump());
}

TEST(Simulation, MergeIsOrderIndependent) {
    const Code code = generator_recursive(2, 5, F2);
    const auto a = run_simulation(code, {UniformStart{3}, 1}, 40);
    const auto b = run_simulation(code, {UniformStart{4}, 2}, 30);
    SimReport ab, ba;
    ab.merge(a).merge(b);
    ba.merge(b).merge(a);
    EXPECT_EQ(ab.trials, ba.trials);
    EXPECT_EQ(ab.failures, ba.failures);
    EXPECT_EQ(ab.per_start, ba.per_start);
    EXPECT_EQ(ab.failure_kinds, ba.failure_kinds);
    EXPECT_EQ(ab.trials, 70u);
}

TEST(Simulation, RejectsChannelsThatDoNotFit) {
    const Code code = generator_recursive(3, 7, F2);
    EXPECT_THROW(run_simulation(code, {RandomLength{5}, 0}, 10), PreconditionViolated);
    EXPECT_THROW(run_simulation(code, {UniformStart{8}, 0}, 10), PreconditionViolated);
    EXPECT_THROW(run_simulation(code, {FixedBurst{0, 1}, 0}, 10), PreconditionViolated);
    EXPECT_THROW(run_simulation(code, {FixedBurst{1, 1}, 0}, 0), PreconditionViolated);
}

TEST(Channel, ParseAndFormat) {
    for (const std::string text : {"fixed:3:2", "uniform:4", "random:0"})
        EXPECT_EQ(channel_string(parse_channel(text, 1)), text);
    EXPECT_EQ(parse_channel("uniform:4", 99).seed, 99u);
    for (const std::string bad : {"", "uniform", "uniform:", "uniform:x", "fixed:1", "random:1:2", "burst:3"})
        EXPECT_THROW(parse_channel(bad, 0), InputError) << bad;
}

TEST(Report, JsonSchema) {
    const Code code = generator_recursive(3, 7, F2);
    const ChannelModel channel{UniformStart{4}, 3};
    const auto doc = to_json(run_simulation(code, channel, 70), code, channel);
    EXPECT_EQ(doc.at("schema"), 1);
    EXPECT_EQ(doc.at("code").at("n"), 7);
    EXPECT_EQ(doc.at("channel").at("kind"), "uniform-start");
    EXPECT_EQ(doc.at("channel").at("seed"), 3);
    EXPECT_EQ(doc.at("trials"), 70);
    EXPECT_EQ(doc.at("successes"), 70);
    EXPECT_TRUE(doc.at("failure_kinds").is_object());
    EXPECT_EQ(doc.at("per_start").size(), 7u);
    EXPECT_FALSE(doc.contains("wall_time_seconds"));
}
