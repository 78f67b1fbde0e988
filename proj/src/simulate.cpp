#include "burst/simulate.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <thread>

#include "burst/errors.hpp"

namespace burst {

namespace {

std::size_t parse_count(std::string_view text, std::string_view channel) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw InputError("bad number '" + std::string(text) + "' in channel '" + std::string(channel) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const auto next = text.find(sep, pos);
        parts.push_back(text.substr(pos, next - pos));
        if (next == std::string_view::npos) return parts;
        pos = next + 1;
    }
}

void check_channel(const ChannelModel& channel, std::size_t k, std::size_t n) {
    auto fail = [](const std::string& what) { throw PreconditionViolated("channel does not fit the code: " + what); };
    if (const auto* fixed = std::get_if<FixedBurst>(&channel.kind)) {
        if (fixed->start < 1 || fixed->start > n) fail("burst start outside 1..n");
        if (fixed->length > n) fail("burst length exceeds n");
    } else if (const auto* uniform = std::get_if<UniformStart>(&channel.kind)) {
        if (uniform->length > n) fail("burst length exceeds n");
    } else if (std::get<RandomLength>(channel.kind).max_length > n - k) {
        fail("random burst length may exceed n - k");
    }
}

struct Trial {
    BurstPattern burst;
    Vector message;
};

SimReport run_trials(const Code& code, std::span<const Trial> trials) {
    SimReport report;
    report.per_start.resize(code.n());
    for (const auto& trial : trials) {
        ++report.trials;
        auto& slot = report.per_start[trial.burst.start - 1];
        ++slot.trials;
        std::string failure;
        try {
            const auto codeword = encode(code, trial.message);
            const auto result = decode(code, burst::erase(codeword, trial.burst));
            if (result.message != trial.message || result.codeword != codeword) failure = "Mismatch";
        } catch (const BurstTooLong&) {
            failure = "BurstTooLong";
        } catch (const NotABurst&) {
            failure = "NotABurst";
        } catch (const InconsistentWord&) {
            failure = "InconsistentWord";
        } catch (const InternalSingular&) {
            failure = "InternalSingular";
        } catch (const std::exception&) {
            failure = "Other";
        }
        if (failure.empty()) {
            ++report.successes;
        } else {
            ++report.failures;
            ++slot.failures;
            ++report.failure_kinds[failure];
        }
    }
    return report;
}

} // namespace

ChannelModel parse_channel(std::string_view text, std::uint64_t seed) {
    const auto parts = split(text, ':');
    if (parts[0] == "fixed" && parts.size() == 3)
        return {FixedBurst{parse_count(parts[1], text), parse_count(parts[2], text)}, seed};
    if (parts[0] == "uniform" && parts.size() == 2) return {UniformStart{parse_count(parts[1], text)}, seed};
    if (parts[0] == "random" && parts.size() == 2) return {RandomLength{parse_count(parts[1], text)}, seed};
    throw InputError("channel '" + std::string(text) +
                     "' is not one of fixed:START:LEN, uniform:LEN, random:MAX");
}

std::string channel_string(const ChannelModel& channel) {
    if (const auto* fixed = std::get_if<FixedBurst>(&channel.kind))
        return "fixed:" + std::to_string(fixed->start) + ":" + std::to_string(fixed->length);
    if (const auto* uniform = std::get_if<UniformStart>(&channel.kind))
        return "uniform:" + std::to_string(uniform->length);
    return "random:" + std::to_string(std::get<RandomLength>(channel.kind).max_length);
}

TrialSource::TrialSource(const Code& code, const ChannelModel& channel)
    : field_(code.field()), k_(code.k()), n_(code.n()), channel_(channel), rng_(channel.seed) {}

BurstPattern TrialSource::next_burst() {
    if (const auto* fixed = std::get_if<FixedBurst>(&channel_.kind)) return {fixed->start, fixed->length};
    if (const auto* uniform = std::get_if<UniformStart>(&channel_.kind)) return {1 + draw(n_), uniform->length};
    const auto max_length = std::get<RandomLength>(channel_.kind).max_length;
    const std::size_t start = 1 + draw(n_);
    return {start, static_cast<std::size_t>(draw(max_length + 1))};
}

Vector TrialSource::next_message() {
    Vector message;
    message.reserve(k_);
    for (std::size_t i = 0; i < k_; ++i) message.emplace_back(field_, static_cast<std::int64_t>(draw(field_.modulus())));
    return message;
}

SimReport& SimReport::merge(const SimReport& other) {
    trials += other.trials;
    successes += other.successes;
    failures += other.failures;
    if (per_start.size() < other.per_start.size()) per_start.resize(other.per_start.size());
    for (std::size_t i = 0; i < other.per_start.size(); ++i) {
        per_start[i].trials += other.per_start[i].trials;
        per_start[i].failures += other.per_start[i].failures;
    }
    for (const auto& [kind, count] : other.failure_kinds) failure_kinds[kind] += count;
    return *this;
}

SimReport run_simulation(const Code& code, const ChannelModel& channel, std::uint64_t trials,
                         const SimOptions& options) {
    if (trials == 0) throw PreconditionViolated("simulation needs at least one trial");
    check_channel(channel, code.k(), code.n());
    const auto started = std::chrono::steady_clock::now();

    // Inputs are drawn up front in trial order so the seed alone fixes them.
    TrialSource source(code, channel);
    std::vector<Trial> inputs;
    inputs.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto burst = source.next_burst();
        inputs.push_back({burst, source.next_message()});
    }

    const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, inputs.size());
    std::vector<SimReport> partial(workers);
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (inputs.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(inputs.size(), w * chunk);
            const std::size_t end = std::min(inputs.size(), begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                partial[w] = run_trials(code, std::span<const Trial>(inputs).subspan(begin, end - begin));
            });
        }
    }

    SimReport report;
    report.per_start.resize(code.n());
    for (const auto& p : partial) report.merge(p);
    report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

nlohmann::json to_json(const SimReport& report, const Code& code, const ChannelModel& channel) {
    nlohmann::json channel_json;
    if (const auto* fixed = std::get_if<FixedBurst>(&channel.kind)) {
        channel_json = {{"kind", "fixed-burst"}, {"start", fixed->start}, {"length", fixed->length}};
    } else if (const auto* uniform = std::get_if<UniformStart>(&channel.kind)) {
        channel_json = {{"kind", "uniform-start"}, {"length", uniform->length}};
    } else {
        channel_json = {{"kind", "random-length"}, {"max_length", std::get<RandomLength>(channel.kind).max_length}};
    }
    channel_json["seed"] = channel.seed;

    nlohmann::json per_start = nlohmann::json::array();
    for (std::size_t i = 0; i < report.per_start.size(); ++i)
        per_start.push_back(
            {{"start", i + 1}, {"trials", report.per_start[i].trials}, {"failures", report.per_start[i].failures}});

    return {
        {"schema", 1},
        {"code", {{"p", code.field().modulus()}, {"k", code.k()}, {"n", code.n()}}},
        {"channel", channel_json},
        {"trials", report.trials},
        {"successes", report.successes},
        {"failures", report.failures},
        {"failure_kinds", report.failure_kinds},
        {"per_start", per_start},
    };
}

} // namespace burst
