#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "burst/construct.hpp"

namespace burst {

/// Cyclic run of erased positions start, start+1, ..., start+length-1
/// (1-based, wrapping from n to 1).
struct BurstPattern {
    std::size_t start = 1;
    std::size_t length = 0;

    /// Erased positions (1-based) in burst order. Throws OutOfRange unless
    /// 1 <= start <= n and length <= n.
    std::vector<std::size_t> positions(std::size_t n) const;

    friend bool operator==(const BurstPattern&, const BurstPattern&) = default;
};

using Symbol = std::optional<FieldElement>;

/// A codeword with some symbols replaced by erasure markers (nullopt).
class ReceivedWord {
public:
    explicit ReceivedWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    bool erased(std::size_t position) const { return !symbols_.at(position - 1).has_value(); }

    /// The single cyclic burst covering every erasure. Throws NotABurst when
    /// the erasures are not cyclically contiguous. No erasures reports
    /// {1, 0}; all erased reports {1, n}.
    BurstPattern burst() const;

private:
    std::vector<Symbol> symbols_;
};

struct DecodeResult {
    Vector codeword;
    Vector message;
};

/// message * G. Throws DimensionMismatch unless |message| = k.
Vector encode(const Code& code, std::span<const FieldElement> message);

ReceivedWord erase(std::span<const FieldElement> codeword, const BurstPattern& burst);

/// Recovers the codeword from the k known symbols that start right after the
/// burst. Throws BurstTooLong, NotABurst, and InconsistentWord if the known
/// symbols do not all agree with a single codeword.
DecodeResult decode(const Code& code, const ReceivedWord& received);

} // namespace burst
