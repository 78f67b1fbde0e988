#include "burst/codec.hpp"

#include <string>

#include "burst/errors.hpp"
#include "burst/goodness.hpp"

namespace burst {

std::vector<std::size_t> BurstPattern::positions(std::size_t n) const {
    if (n == 0 || start < 1 || start > n)
        throw OutOfRange("burst start " + std::to_string(start) + " outside 1.." + std::to_string(n));
    if (length > n) throw OutOfRange("burst length " + std::to_string(length) + " exceeds n = " + std::to_string(n));
    std::vector<std::size_t> out(length);
    for (std::size_t i = 0; i < length; ++i) out[i] = (start - 1 + i) % n + 1;
    return out;
}

BurstPattern ReceivedWord::burst() const {
    const std::size_t n = symbols_.size();
    std::size_t erased_count = 0;
    for (const auto& s : symbols_) erased_count += s.has_value() ? 0 : 1;
    if (erased_count == 0) return {1, 0};
    if (erased_count == n) return {1, n};

    // An erased position whose cyclic predecessor is known opens a run.
    std::optional<std::size_t> start;
    for (std::size_t i = 0; i < n; ++i) {
        if (symbols_[i] || !symbols_[(i + n - 1) % n]) continue;
        if (start) throw NotABurst("erasures form more than one cyclic run");
        start = i;
    }
    return {*start + 1, erased_count};
}

Vector encode(const Code& code, std::span<const FieldElement> message) {
    if (message.size() != code.k())
        throw DimensionMismatch("message has " + std::to_string(message.size()) + " symbols, expected " +
                                std::to_string(code.k()));
    return multiply(code.generator().transpose(), message);
}

ReceivedWord erase(std::span<const FieldElement> codeword, const BurstPattern& burst) {
    std::vector<Symbol> symbols(codeword.begin(), codeword.end());
    for (auto pos : burst.positions(codeword.size())) symbols[pos - 1].reset();
    return ReceivedWord(std::move(symbols));
}

DecodeResult decode(const Code& code, const ReceivedWord& received) {
    const std::size_t n = code.n(), k = code.k();
    if (received.size() != n)
        throw DimensionMismatch("received word has " + std::to_string(received.size()) + " symbols, expected " +
                                std::to_string(n));
    const BurstPattern burst = received.burst();
    if (burst.length > n - k)
        throw BurstTooLong("burst of length " + std::to_string(burst.length) + " exceeds n - k = " +
                           std::to_string(n - k));

    const auto window = cyclic_window((burst.start - 1 + burst.length) % n, k, n);
    Vector known;
    known.reserve(k);
    for (auto c : window) known.push_back(*received.symbols()[c]);

    // message * G_window = known  <=>  G_window^T message^T = known^T
    Vector message;
    try {
        message = solve(select_columns(code.generator(), window).transpose(), known);
    } catch (const Singular&) {
        throw InternalSingular("information-set submatrix of a good generator is singular");
    }
    Vector codeword = encode(code, message);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = received.symbols()[i];
        if (s && *s != codeword[i])
            throw InconsistentWord("known symbol at position " + std::to_string(i + 1) +
                                   " disagrees with the recovered codeword");
    }
    return {std::move(codeword), std::move(message)};
}

} // namespace burst
