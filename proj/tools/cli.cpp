#include "cli.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "burst/codec.hpp"
#include "burst/construct.hpp"
#include "burst/errors.hpp"
#include "burst/goodness.hpp"
#include "burst/matrix_io.hpp"
#include "burst/simulate.hpp"

namespace burst::cli {

namespace {

constexpr std::uint64_t kDefaultColumnLimit = 1'000'000;

std::string join_csv(const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i].value());
    }
    return out;
}

// Parses one CSV cell as a residue; "?" is an erasure when allowed.
Symbol parse_symbol(std::string_view cell, const PrimeField& field, bool allow_erasure) {
    if (allow_erasure && cell == "?") return std::nullopt;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size())
        throw InputError("bad symbol '" + std::string(cell) + "'");
    if (value >= field.modulus())
        throw InputError("symbol " + std::string(cell) + " out of range for p = " + std::to_string(field.modulus()));
    return FieldElement(field, static_cast<std::int64_t>(value));
}

std::vector<Symbol> parse_csv(const std::string& csv, const PrimeField& field, bool allow_erasure) {
    std::vector<Symbol> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = csv.find(',', pos);
        out.push_back(parse_symbol(std::string_view(csv).substr(pos, comma - pos), field, allow_erasure));
        if (comma == std::string::npos) return out;
        pos = comma + 1;
    }
}

void emit_matrix(const Matrix& m, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        write_matrix(out, m);
    else
        save_matrix(out_path, m);
}

int cmd_construct(std::uint32_t p, std::size_t k, std::size_t n, const std::string& method,
                  const std::string& out_path, std::ostream& out) {
    const PrimeField field(p);
    const Code code = method == "explicit" ? generator_explicit(field, k, n) : generator_recursive(k, n, field);
    emit_matrix(code.generator(), out_path, out);
    return kOk;
}

int cmd_verify(const std::string& in, bool prefix, const std::string& report, std::ostream& out) {
    const Matrix g = load_matrix(in);
    const auto windows = window_reports(g);
    std::vector<const WindowReport*> failing;
    for (const auto& w : windows)
        if (!w.ok) failing.push_back(&w);
    const bool good = g.rows() == 0 || failing.empty();
    std::optional<bool> prefix_good;
    if (prefix) prefix_good = is_prefix_good(g);

    if (report == "json") {
        nlohmann::json failing_json = nlohmann::json::array();
        for (const auto* w : failing)
            failing_json.push_back({{"start", w->window_start}, {"columns", w->columns}, {"rank", w->rank}});
        nlohmann::json doc = {
            {"schema", 1},
            {"p", g.field().modulus()},
            {"k", g.rows()},
            {"n", g.cols()},
            {"good", good},
            {"windows", windows.size()},
            {"failing_windows", failing_json},
        };
        if (prefix_good) doc["prefix_good"] = *prefix_good;
        out << doc.dump(2) << '\n';
    } else {
        if (good)
            out << "good: all " << windows.size() << " cyclic windows have rank " << g.rows() << '\n';
        else
            out << "not good: " << failing.size() << " of " << windows.size() << " cyclic windows are dependent\n";
        for (const auto* w : failing) {
            out << "window " << w->window_start << ": columns ";
            for (std::size_t i = 0; i < w->columns.size(); ++i) out << (i ? "," : "") << w->columns[i];
            out << " rank " << w->rank << '\n';
        }
        if (prefix_good) out << "prefix-good: " << (*prefix_good ? "yes" : "no") << '\n';
    }
    return good && prefix_good.value_or(true) ? kOk : kDomainError;
}

int cmd_extend(const std::string& in, const std::string& mode, bool all, std::ostream& out) {
    const Matrix g = load_matrix(in);
    if (mode == "dimension") {
        write_matrix(out, extend_fixed_dimension(g));
    } else if (mode == "redundancy") {
        write_matrix(out, extend_fixed_redundancy(g));
    } else if (all) {
        for (const auto& x : extension_columns(g, kDefaultColumnLimit)) out << join_csv(x) << '\n';
    } else {
        out << join_csv(unique_binary_extension(g)) << '\n';
    }
    return kOk;
}

int cmd_dual(const std::string& in, const std::string& out_path, std::ostream& out) {
    emit_matrix(dual_generator(load_matrix(in)), out_path, out);
    return kOk;
}

int cmd_encode(const std::string& in, const std::string& csv, std::ostream& out) {
    const Code code(load_matrix(in));
    Vector message;
    for (const auto& s : parse_csv(csv, code.field(), false)) message.push_back(*s);
    out << join_csv(encode(code, message)) << '\n';
    return kOk;
}

int cmd_decode(const std::string& in, const std::string& csv, std::ostream& out) {
    const Code code(load_matrix(in));
    const auto result = decode(code, ReceivedWord(parse_csv(csv, code.field(), true)));
    out << join_csv(result.codeword) << '\n';
    return kOk;
}

int cmd_simulate(const std::string& in, const std::string& channel_text, std::uint64_t trials, std::uint64_t seed,
                 std::size_t threads, bool json, std::ostream& out) {
    const Code code(load_matrix(in));
    const auto channel = parse_channel(channel_text, seed);
    const auto report = run_simulation(code, channel, trials, {threads});
    if (json) {
        out << to_json(report, code, channel).dump(2) << '\n';
        return kOk;
    }
    out << "code: p=" << code.field().modulus() << " k=" << code.k() << " n=" << code.n() << '\n'
        << "channel: " << channel_string(channel) << " seed=" << seed << '\n'
        << "trials: " << report.trials << '\n'
        << "successes: " << report.successes << '\n'
        << "failures: " << report.failures << '\n';
    for (const auto& [kind, count] : report.failure_kinds) out << "  " << kind << ": " << count << '\n';
    out << "wall_time_s: " << report.wall_time_seconds << '\n';
    return kOk;
}

int cmd_enumerate(const std::string& in, std::uint64_t limit, std::ostream& out) {
    for (const auto& x : extension_columns(load_matrix(in), limit)) out << join_csv(x) << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, verify and use codes that correct one cyclic burst of n-k erasures", "burstcode"};
    app.require_subcommand(1);

    std::string in, out_path, method = "recursive", report = "text", mode = "dimension", message, received,
                channel;
    std::uint32_t p = 0;
    std::size_t k = 0, n = 0, threads = 1;
    std::uint64_t trials = 0, seed = 0, limit = 0;
    bool prefix = false, all = false, json = false;

    auto* construct = app.add_subcommand("construct", "Build a good generator matrix");
    construct->add_option("--p", p, "Prime field modulus")->required();
    construct->add_option("--k", k, "Code dimension")->required();
    construct->add_option("--n", n, "Code length")->required();
    construct->add_option("--method", method, "Construction")->check(CLI::IsMember({"recursive", "explicit"}));
    construct->add_option("--out", out_path, "Output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Check every cyclic window of a matrix");
    verify->add_option("--in", in, "Matrix file")->required();
    verify->add_flag("--prefix", prefix, "Also check every leftmost prefix");
    verify->add_option("--report", report, "Report format")->check(CLI::IsMember({"json", "text"}));

    auto* extend = app.add_subcommand("extend", "Extend a good matrix");
    extend->add_option("--in", in, "Matrix file")->required();
    extend->add_option("--mode", mode, "Extension")->check(CLI::IsMember({"dimension", "redundancy", "column"}));
    extend->add_flag("--all", all, "Column mode: list every extension column");

    auto* dual = app.add_subcommand("dual", "Generator of the dual code");
    dual->add_option("--in", in, "Matrix file")->required();
    dual->add_option("--out", out_path, "Output file (default stdout)");

    auto* encode_cmd = app.add_subcommand("encode", "Encode one message");
    encode_cmd->add_option("--in", in, "Matrix file")->required();
    encode_cmd->add_option("--message", message, "Comma-separated message symbols")->required();

    auto* decode_cmd = app.add_subcommand("decode", "Decode one received word");
    decode_cmd->add_option("--in", in, "Matrix file")->required();
    decode_cmd->add_option("--received", received, "Comma-separated symbols, ? marks an erasure")->required();

    auto* simulate = app.add_subcommand("simulate", "Run the burst-erasure channel simulator");
    simulate->add_option("--in", in, "Matrix file")->required();
    simulate->add_option("--channel", channel, "fixed:START:LEN | uniform:LEN | random:MAX")->required();
    simulate->add_option("--trials", trials, "Number of trials")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed, "PRNG seed")->required();
    simulate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    simulate->add_flag("--json", json, "Emit the JSON report");

    auto* enumerate = app.add_subcommand("enumerate-extensions", "List every column that keeps the matrix good");
    enumerate->add_option("--in", in, "Matrix file")->required();
    enumerate->add_option("--limit", limit, "Refuse when (q-1)^k exceeds this")->required();

    std::vector<std::string> argv_storage{"burstcode"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kMalformedInput;
    }

    try {
        if (*construct) return cmd_construct(p, k, n, method, out_path, out);
        if (*verify) return cmd_verify(in, prefix, report, out);
        if (*extend) return cmd_extend(in, mode, all, out);
        if (*dual) return cmd_dual(in, out_path, out);
        if (*encode_cmd) return cmd_encode(in, message, out);
        if (*decode_cmd) return cmd_decode(in, received, out);
        if (*simulate) return cmd_simulate(in, channel, trials, seed, threads, json, out);
        if (*enumerate) return cmd_enumerate(in, limit, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kMalformedInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const InternalSingular& e) {
        err << "internal error: " << e.what() << '\n';
        return kDomainError;
    }
    return kMalformedInput;
}

} // namespace burst::cli
