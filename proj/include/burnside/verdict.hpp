// Finiteness verdicts with their certificates.
#ifndef BURNSIDE_VERDICT_HPP
#define BURNSIDE_VERDICT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <burnside/order.hpp>
#include <burnside/word.hpp>

namespace burnside {

struct FiniteVerdict {
    std::optional<std::uint64_t> closure_order;
    /// Order of every checked word, in the order the words were checked.
    std::vector<std::pair<FreeWord, std::uint64_t>> word_orders;

    friend bool operator==(const FiniteVerdict&, const FiniteVerdict&) = default;
};

struct InfiniteVerdict {
    FreeWord witness;
    InfiniteReason reason = InfiniteReason::NotQuasiunipotent;
    /// The Burnside-set word that first failed, when a shorter witness was
    /// then found by search.
    std::optional<FreeWord> detected_by;
    /// Set when the witness only fails semisimplicity: the semisimplified
    /// representation may still have finite image.
    bool semisimplification_caveat = false;

    friend bool operator==(const InfiniteVerdict&, const InfiniteVerdict&) = default;
};

struct InconclusiveVerdict {
    std::string cap_exceeded;

    friend bool operator==(const InconclusiveVerdict&, const InconclusiveVerdict&) = default;
};

using Verdict = std::variant<FiniteVerdict, InfiniteVerdict, InconclusiveVerdict>;

inline bool is_finite(const Verdict& v) { return std::holds_alternative<FiniteVerdict>(v); }
inline bool is_infinite(const Verdict& v) { return std::holds_alternative<InfiniteVerdict>(v); }
inline bool is_inconclusive(const Verdict& v) { return std::holds_alternative<InconclusiveVerdict>(v); }

inline const FiniteVerdict& as_finite(const Verdict& v) { return std::get<FiniteVerdict>(v); }
inline const InfiniteVerdict& as_infinite(const Verdict& v) { return std::get<InfiniteVerdict>(v); }

inline std::string kind_name(const Verdict& v) {
    if (is_finite(v)) return "Finite";
    if (is_infinite(v)) return "Infinite";
    return "Inconclusive";
}

/// One-line human summary, e.g. "Infinite, witness g1*g2 (length 2)".
inline std::string summary(const Verdict& v) {
    if (const auto* f = std::get_if<FiniteVerdict>(&v)) {
        std::string s = "Finite";
        if (f->closure_order) s += ", closure order " + std::to_string(*f->closure_order);
        s += ", " + std::to_string(f->word_orders.size()) + " words checked";
        return s;
    }
    if (const auto* i = std::get_if<InfiniteVerdict>(&v)) {
        std::string s = "Infinite, witness " + i->witness.to_string() + " (length " + std::to_string(i->witness.length()) + ")";
        s += ", " + to_string(i->reason);
        if (i->detected_by) s += ", detected by " + i->detected_by->to_string();
        if (i->semisimplification_caveat) s += "; semisimplification may still be finite";
        return s;
    }
    return "Inconclusive: " + std::get<InconclusiveVerdict>(v).cap_exceeded;
}

}  // namespace burnside

#endif
