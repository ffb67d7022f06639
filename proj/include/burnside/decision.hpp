// Finiteness decisions for finitely generated matrix groups, the closure
// oracle, and trace fingerprints.
#ifndef BURNSIDE_DECISION_HPP
#define BURNSIDE_DECISION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <burnside/matrix.hpp>
#include <burnside/order.hpp>
#include <burnside/parallel.hpp>
#include <burnside/spin4.hpp>
#include <burnside/stokes.hpp>
#include <burnside/verdict.hpp>
#include <burnside/word.hpp>

namespace burnside {

/// Invertible generators over a shared field and dimension.
class GroupInput {
   public:
    GroupInput(FieldPtr field, std::size_t n, Representation generators)
        : field_(std::move(field)), n_(n), gens_(std::move(generators)) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            const auto& g = gens_[i];
            if (g.dim() != n_) throw std::invalid_argument("generator " + std::to_string(i + 1) + " has wrong dimension");
            if (!same_field(g.field(), field_)) throw std::invalid_argument("generator " + std::to_string(i + 1) + " over another field");
            if (det(g).is_zero()) throw std::invalid_argument("generator " + std::to_string(i + 1) + " is singular");
            inv_.push_back(inverse(g));
        }
    }

    explicit GroupInput(Representation generators)
        : GroupInput(generators.at(0).field(), generators.at(0).dim(), generators) {}

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return n_; }
    std::size_t rank() const noexcept { return gens_.size(); }
    const Representation& generators() const noexcept { return gens_; }

    /// Image of g_i (i > 0) or g_|i|^-1 (i < 0).
    const SquareMatrix& letter(int i) const {
        const std::size_t k = static_cast<std::size_t>(i > 0 ? i : -i);
        if (i == 0 || k > gens_.size()) throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
        return i > 0 ? gens_[k - 1] : inv_[k - 1];
    }

   private:
    FieldPtr field_;
    std::size_t n_;
    Representation gens_;
    Representation inv_;
};

inline SquareMatrix evaluate_word(const GroupInput& g, const FreeWord& w) {
    SquareMatrix p = SquareMatrix::identity(g.field(), g.dim());
    for (int x : w.letters()) p *= g.letter(x);
    return p;
}

/// Breadth-first closure under the generators and their inverses.
inline Verdict bfs_closure(const GroupInput& g, std::size_t cap = 200000, unsigned threads = 1) {
    std::unordered_set<std::string> seen;
    std::vector<SquareMatrix> frontier{SquareMatrix::identity(g.field(), g.dim())};
    seen.insert(frontier.front().key());
    std::vector<int> letters;
    for (int i = 1; i <= static_cast<int>(g.rank()); ++i) {
        letters.push_back(i);
        letters.push_back(-i);
    }
    const std::size_t width = letters.size();
    while (!frontier.empty()) {
        std::vector<std::optional<std::pair<SquareMatrix, std::string>>> next(frontier.size() * width);
        parallel_for(next.size(), threads, [&](std::size_t k) {
            SquareMatrix y = frontier[k / width] * g.letter(letters[k % width]);
            std::string key = y.key();
            next[k].emplace(std::move(y), std::move(key));
        });
        frontier.clear();
        for (auto& item : next) {
            if (!seen.insert(item->second).second) continue;
            if (seen.size() > cap)
                return InconclusiveVerdict{"closure exceeded cap of " + std::to_string(cap) + " elements"};
            frontier.push_back(std::move(item->first));
        }
    }
    return FiniteVerdict{seen.size(), {}};
}

namespace detail {

struct WordFailure {
    std::size_t index;
    InfiniteReason reason;
};

inline std::optional<WordFailure> first_infinite(const GroupInput& g, const OrderTester& tester,
                                                 const std::vector<FreeWord>& words, unsigned threads,
                                                 std::vector<std::optional<OrderResult>>* results = nullptr) {
    std::vector<std::optional<OrderResult>> local(words.size());
    auto& res = results ? *results : local;
    res.assign(words.size(), std::nullopt);
    const auto bad = first_index(words.size(), threads, [&](std::size_t k) {
        res[k] = tester.finite_order(evaluate_word(g, words[k]));
        return !res[k]->is_finite();
    });
    if (!bad) return std::nullopt;
    return WordFailure{*bad, res[*bad]->reason()};
}

}  // namespace detail

/// Searches freely reduced words by length then order; Inconclusive when
/// every word up to max_len has finite order.
inline Verdict shortest_infinite_word(const GroupInput& g, std::size_t max_len, unsigned threads = 1) {
    if (max_len < 1) throw std::invalid_argument("max_len must be positive");
    const OrderTester tester(g.field(), g.dim());
    const int r = static_cast<int>(g.rank());
    for (std::size_t len = 1; len <= max_len; ++len) {
        const auto words = reduced_words(r, len);
        if (auto fail = detail::first_infinite(g, tester, words, threads))
            return InfiniteVerdict{words[fail->index], fail->reason, std::nullopt, false};
    }
    return InconclusiveVerdict{"no word of infinite order up to length " + std::to_string(max_len)};
}

struct DecideOptions {
    unsigned threads = 1;
    /// Closure oracle cap for filling closure_order; 0 skips the oracle.
    std::size_t closure_cap = 200000;
    /// Words examined when looking for a witness shorter than the failing
    /// Burnside word.
    std::size_t witness_budget = 20000;
};

/// Checks every word of burnside_set_gl2(r) for finite order.
inline Verdict decide_finite_gl2(const GroupInput& g, const DecideOptions& opt = {}) {
    if (g.dim() != 2) throw std::invalid_argument("decide_finite_gl2 expects 2x2 generators, got " + std::to_string(g.dim()));
    const OrderTester tester(g.field(), 2);
    const auto words = burnside_set_gl2(g.rank());
    std::vector<std::optional<OrderResult>> results;
    if (auto fail = detail::first_infinite(g, tester, words, opt.threads, &results)) {
        const FreeWord& found = words[fail->index];
        InfiniteVerdict v{found, fail->reason, std::nullopt, false};
        std::size_t spent = 0;
        const int r = static_cast<int>(g.rank());
        for (std::size_t len = 1; len < found.length(); ++len) {
            spent += reduced_word_count(r, len);
            if (spent > opt.witness_budget) break;
            const auto shorter = reduced_words(r, len);
            if (auto f = detail::first_infinite(g, tester, shorter, opt.threads)) {
                v = InfiniteVerdict{shorter[f->index], f->reason, found, false};
                break;
            }
        }
        return v;
    }
    FiniteVerdict v;
    for (std::size_t k = 0; k < words.size(); ++k) v.word_orders.emplace_back(words[k], results[k]->order());
    if (opt.closure_cap > 0) {
        const Verdict closure = bfs_closure(g, opt.closure_cap, opt.threads);
        if (is_finite(closure)) v.closure_order = as_finite(closure).closure_order;
    }
    return v;
}

/// Rechecks a verdict's certificate: an Infinite witness must fail
/// finite_order and Finite word orders must be exact.
inline bool certificate_holds(const GroupInput& g, const Verdict& v) {
    const OrderTester tester(g.field(), g.dim());
    if (const auto* inf = std::get_if<InfiniteVerdict>(&v)) {
        const auto res = tester.finite_order(evaluate_word(g, inf->witness));
        return !res.is_finite() && res.reason() == inf->reason;
    }
    if (const auto* fin = std::get_if<FiniteVerdict>(&v)) {
        for (const auto& [w, k] : fin->word_orders) {
            const auto res = tester.finite_order(evaluate_word(g, w));
            if (!res.is_finite() || res.order() != k) return false;
        }
        return true;
    }
    return true;
}

using TraceFingerprint = std::vector<std::pair<FreeWord, FieldElement>>;

inline std::size_t default_fingerprint_length(std::size_t n) {
    return n >= 8 * sizeof(std::size_t) - 1 ? SIZE_MAX : (std::size_t{1} << n) - 1;
}

/// Traces of all positive words of length 1..max_len (default 2^n - 1).
inline TraceFingerprint trace_fingerprint(const GroupInput& g, std::optional<std::size_t> max_len = std::nullopt,
                                          std::size_t word_limit = 1u << 20) {
    const std::size_t len = max_len.value_or(default_fingerprint_length(g.dim()));
    const std::size_t r = g.rank();
    std::size_t total = 0, level = 1;
    for (std::size_t l = 1; l <= len && r > 0; ++l) {
        if (level > word_limit / r) throw std::length_error("trace fingerprint exceeds the word limit");
        level *= r;
        total += level;
        if (total > word_limit) throw std::length_error("trace fingerprint exceeds the word limit");
    }
    TraceFingerprint out;
    std::vector<std::pair<FreeWord, SquareMatrix>> prev{{FreeWord{}, SquareMatrix::identity(g.field(), g.dim())}};
    for (std::size_t l = 1; l <= len && r > 0; ++l) {
        std::vector<std::pair<FreeWord, SquareMatrix>> cur;
        cur.reserve(prev.size() * r);
        for (const auto& [w, m] : prev)
            for (std::size_t i = 1; i <= r; ++i) {
                const int x = static_cast<int>(i);
                cur.emplace_back(w * FreeWord::generator(x), m * g.letter(x));
            }
        for (const auto& [w, m] : cur) out.emplace_back(w, m.trace());
        prev = std::move(cur);
    }
    return out;
}

/// Decides whether two generator tuples have identical traces on every
/// positive word of length 1..max_len without enumerating the words: the
/// trace difference is linear in rho_1(w) + rho_2(w), so it suffices to test
/// it on a basis of their span, which stabilizes after few steps.
inline bool fingerprints_agree(const GroupInput& g1, const GroupInput& g2, std::optional<std::size_t> max_len = std::nullopt) {
    if (g1.rank() != g2.rank()) throw std::invalid_argument("fingerprints_agree: different numbers of generators");
    if (!same_field(g1.field(), g2.field())) throw std::invalid_argument("fingerprints_agree: different fields");
    const std::size_t len = max_len.value_or(std::max(default_fingerprint_length(g1.dim()), default_fingerprint_length(g2.dim())));
    const std::size_t n1 = g1.dim(), n2 = g2.dim();
    using Pair = std::pair<SquareMatrix, SquareMatrix>;

    std::vector<Pair> basis;
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
    auto flatten = [&](const Pair& p) {
        Vector v = p.first.entries();
        v.insert(v.end(), p.second.entries().begin(), p.second.entries().end());
        return v;
    };
    // Adds p when independent of the basis; false if its traces disagree.
    auto offer = [&](const Pair& p, bool& added) {
        added = false;
        Vector v = flatten(p);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (v[pivots[k]].is_zero()) continue;
            const FieldElement c = v[pivots[k]];
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!rows[k][j].is_zero()) v[j] -= c * rows[k][j];
        }
        std::size_t piv = 0;
        while (piv < v.size() && v[piv].is_zero()) ++piv;
        if (piv == v.size()) return true;
        if (p.first.trace() != p.second.trace()) return false;
        const FieldElement inv = v[piv].inverse();
        for (auto& x : v) x *= inv;
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        basis.push_back(p);
        added = true;
        return true;
    };

    bool added = false;
    for (std::size_t i = 1; i <= g1.rank(); ++i) {
        const int x = static_cast<int>(i);
        if (!offer({g1.letter(x), g2.letter(x)}, added)) return false;
    }
    std::size_t fresh_begin = 0;
    for (std::size_t l = 2; l <= len && fresh_begin < basis.size(); ++l) {
        const std::size_t fresh_end = basis.size();
        // Products of older basis elements were offered at earlier lengths.
        for (std::size_t b = fresh_begin; b < fresh_end; ++b)
            for (std::size_t i = 1; i <= g1.rank(); ++i) {
                const int x = static_cast<int>(i);
                const Pair p{basis[b].first * g1.letter(x), basis[b].second * g2.letter(x)};
                if (!offer(p, added)) return false;
            }
        fresh_begin = fresh_end;
        if (basis.size() == n1 * n1 + n2 * n2) break;
    }
    return true;
}

}  // namespace burnside

#endif
