#include "strembed/types.hpp"

#include <algorithm>

namespace strembed {

Alphabet::Alphabet(std::size_t size) : size_(size) {
    if (size == 0) {
        throw PreconditionError("alphabet must contain at least one symbol");
    }
}

Alphabet::Alphabet(std::size_t size, std::vector<std::string> names)
    : size_(size), names_(std::move(names)) {
    if (size == 0) {
        throw PreconditionError("alphabet must contain at least one symbol");
    }
    if (!names_.empty() && names_.size() != size_) {
        throw PreconditionError("alphabet names must cover every symbol");
    }
}

const std::string& Alphabet::name(Symbol s) const {
    if (s >= names_.size()) {
        throw PreconditionError("symbol has no display name");
    }
    return names_[s];
}

Str::Str(std::size_t alphabet_size, std::vector<Symbol> symbols)
    : alphabet_size_(alphabet_size), symbols_(std::move(symbols)) {
    if (alphabet_size_ == 0) {
        throw PreconditionError("alphabet must contain at least one symbol");
    }
    const auto bad = std::ranges::find_if(symbols_, [&](Symbol s) { return s >= alphabet_size_; });
    if (bad != symbols_.end()) {
        throw PreconditionError("symbol id " + std::to_string(*bad) + " outside alphabet of size " +
                                std::to_string(alphabet_size_));
    }
}

Str Str::slice(std::size_t begin, std::size_t end) const {
    if (begin > end || end > symbols_.size()) {
        throw PreconditionError("slice out of range");
    }
    return {alphabet_size_, std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(begin),
                                                symbols_.begin() + static_cast<std::ptrdiff_t>(end))};
}

Str operator+(const Str& a, const Str& b) {
    require_same_alphabet(a, b);
    std::vector<Symbol> out(a.symbols().begin(), a.symbols().end());
    out.insert(out.end(), b.symbols().begin(), b.symbols().end());
    return {a.alphabet_size(), std::move(out)};
}

void require_same_alphabet(const Str& x, const Str& y) {
    if (x.alphabet_size() != y.alphabet_size()) {
        throw AlphabetMismatch("strings over different alphabets (" + std::to_string(x.alphabet_size()) +
                               " vs " + std::to_string(y.alphabet_size()) + " symbols)");
    }
}

const char* to_string(MetricKind kind) noexcept {
    return kind == MetricKind::edit ? "edit" : "indel";
}

MetricKind parse_metric_kind(const std::string& text) {
    if (text == "edit") return MetricKind::edit;
    if (text == "indel") return MetricKind::indel;
    throw PreconditionError("unknown metric kind '" + text + "' (expected edit or indel)");
}

}  // namespace strembed
