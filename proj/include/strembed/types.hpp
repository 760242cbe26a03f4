#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace strembed {

using Symbol = std::uint32_t;

// Error hierarchy. Every library failure derives from Error so callers (the
// CLI in particular) can map them onto exit codes in one place.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct AlphabetMismatch : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct SizeBoundExceeded : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct InvalidAlignment : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct GenerationBudgetExhausted : Error {
    using Error::Error;
};

// Internal consistency failure: a value that the construction guarantees did
// not materialize (e.g. a non-integral recovery).
struct InconsistencyError : Error {
    using Error::Error;
};

/// Alphabet with dense symbol ids 0..size-1 and optional display names.
class Alphabet {
public:
    explicit Alphabet(std::size_t size);
    Alphabet(std::size_t size, std::vector<std::string> names);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool has_names() const noexcept { return !names_.empty(); }
    [[nodiscard]] const std::string& name(Symbol s) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::size_t size_;
    std::vector<std::string> names_;
};

/// A finite sequence of symbol ids over an alphabet of `alphabet_size`
/// symbols. Display names live at the I/O boundary, not here.
class Str {
public:
    Str() = default;
    Str(std::size_t alphabet_size, std::vector<Symbol> symbols);

    [[nodiscard]] std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
    [[nodiscard]] Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return symbols_; }

    /// Substring [begin, end).
    [[nodiscard]] Str slice(std::size_t begin, std::size_t end) const;

    friend bool operator==(const Str&, const Str&) = default;

private:
    std::size_t alphabet_size_ = 1;
    std::vector<Symbol> symbols_;
};

/// Concatenation; both operands must share the alphabet.
Str operator+(const Str& a, const Str& b);

void require_same_alphabet(const Str& x, const Str& y);

enum class MetricKind { edit, indel };

[[nodiscard]] const char* to_string(MetricKind kind) noexcept;
[[nodiscard]] MetricKind parse_metric_kind(const std::string& text);

}  // namespace strembed
