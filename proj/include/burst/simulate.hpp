#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "burst/codec.hpp"

namespace burst {

/// Every trial erases the same burst.
struct FixedBurst {
    std::size_t start;
    std::size_t length;
};

/// Fixed length, start uniform over 1..n.
struct UniformStart {
    std::size_t length;
};

/// Start uniform over 1..n, length uniform over 0..max_length.
struct RandomLength {
    std::size_t max_length;
};

struct ChannelModel {
    std::variant<FixedBurst, UniformStart, RandomLength> kind;
    std::uint64_t seed = 0;
};

/// Parses "fixed:START:LEN", "uniform:LEN" or "random:MAX". Throws InputError.
ChannelModel parse_channel(std::string_view text, std::uint64_t seed);
std::string channel_string(const ChannelModel& channel);

/// Draws trial inputs from std::mt19937_64 seeded with the channel seed. Each
/// bounded draw takes one 64-bit output reduced modulo the bound. Per trial the
/// order is: burst start (uniform and random channels), burst length (random
/// channel), then the k message symbols.
class TrialSource {
public:
    TrialSource(const Code& code, const ChannelModel& channel);

    BurstPattern next_burst();
    Vector next_message();

private:
    std::uint64_t draw(std::uint64_t bound) { return rng_() % bound; }

    PrimeField field_;
    std::size_t k_;
    std::size_t n_;
    ChannelModel channel_;
    std::mt19937_64 rng_;
};

struct StartStats {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;

    friend bool operator==(const StartStats&, const StartStats&) = default;
};

struct SimReport {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t failures = 0;
    std::vector<StartStats> per_start;                 ///< index = burst start - 1
    std::map<std::string, std::uint64_t> failure_kinds; ///< error name -> count
    double wall_time_seconds = 0.0;

    /// Adds another partial report over the same code. Counters commute, so
    /// the merge order does not matter.
    SimReport& merge(const SimReport& other);
};

struct SimOptions {
    std::size_t threads = 1;
};

/// Encodes random messages, erases channel bursts, decodes and tallies.
/// Deterministic for a given seed regardless of thread count. Decode errors
/// count as failures. Throws PreconditionViolated on trials = 0 or a channel
/// that does not fit the code.
SimReport run_simulation(const Code& code, const ChannelModel& channel, std::uint64_t trials,
                         const SimOptions& options = {});

/// Stable-keyed report, schema 1. Wall time is left out so equal inputs give
/// byte-identical JSON.
nlohmann::json to_json(const SimReport& report, const Code& code, const ChannelModel& channel);

} // namespace burst
