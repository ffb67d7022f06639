// Words in the free group F_r and in the universal Coxeter group W_r.
#ifndef BURNSIDE_WORD_HPP
#define BURNSIDE_WORD_HPP

#include <cstddef>
#include <cstdlib>
#include <compare>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

/// Freely reduced word over g1..gr; letter +i is g_i and -i its inverse.
///
/// Words are ordered by length, then lexicographically with letters ranked
/// g1 < g1^-1 < g2 < g2^-1 < ...; every "first word" in the library refers to
/// this order.
class FreeWord {
   public:
    FreeWord() = default;
    explicit FreeWord(const std::vector<int>& letters) {
        for (int x : letters) push(x);
    }

    static FreeWord generator(int i) { return FreeWord(std::vector<int>{i}); }

    /// g_lo g_{lo+1} ... g_hi (1-based, empty when lo > hi).
    static FreeWord run(int lo, int hi) {
        FreeWord w;
        for (int i = lo; i <= hi; ++i) w.push(i);
        return w;
    }

    const std::vector<int>& letters() const noexcept { return w_; }
    std::size_t length() const noexcept { return w_.size(); }
    bool empty() const noexcept { return w_.empty(); }

    /// Largest generator index used; 0 for the empty word.
    int max_index() const {
        int r = 0;
        for (int x : w_) r = std::max(r, std::abs(x));
        return r;
    }

    FreeWord inverse() const {
        FreeWord v;
        for (auto it = w_.rbegin(); it != w_.rend(); ++it) v.push(-*it);
        return v;
    }

    FreeWord& operator*=(const FreeWord& b) {
        for (int x : b.w_) push(x);
        return *this;
    }
    friend FreeWord operator*(FreeWord a, const FreeWord& b) { return a *= b; }

    FreeWord pow(unsigned k) const {
        FreeWord p;
        for (unsigned i = 0; i < k; ++i) p *= *this;
        return p;
    }

    friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.w_ == b.w_; }
    friend std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b) {
        if (auto c = a.w_.size() <=> b.w_.size(); c != 0) return c;
        for (std::size_t k = 0; k < a.w_.size(); ++k)
            if (auto c = rank(a.w_[k]) <=> rank(b.w_[k]); c != 0) return c;
        return std::strong_ordering::equal;
    }

    /// "g1*g2^-1"; the empty word is "1".
    std::string to_string() const {
        if (w_.empty()) return "1";
        std::string s;
        for (std::size_t k = 0; k < w_.size(); ++k) {
            if (k) s += '*';
            s += 'g' + std::to_string(std::abs(w_[k]));
            if (w_[k] < 0) s += "^-1";
        }
        return s;
    }

    /// Rank of a letter in the generator order.
    static int rank(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }
    static int letter_of_rank(int rk) { return rk % 2 ? -(rk / 2 + 1) : rk / 2 + 1; }

   private:
    void push(int x) {
        if (x == 0) throw std::invalid_argument("generator index 0 in free word");
        if (!w_.empty() && w_.back() == -x) w_.pop_back();
        else w_.push_back(x);
    }

    std::vector<int> w_;
};

inline std::string to_string(const FreeWord& w) { return w.to_string(); }

/// Parses "g1*g2^-1" (or "1" for the empty word).
inline FreeWord parse_free_word(const std::string& text) {
    if (text == "1" || text.empty()) return {};
    std::vector<int> letters;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        bool inv = false;
        if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
            inv = true;
            tok.resize(tok.size() - 3);
        }
        if (tok.size() < 2 || tok[0] != 'g' || tok.find_first_not_of("0123456789", 1) != std::string::npos)
            throw std::invalid_argument("malformed word letter '" + tok + "'");
        const int i = std::stoi(tok.substr(1));
        if (i < 1) throw std::invalid_argument("generator index must be positive");
        letters.push_back(inv ? -i : i);
    }
    return FreeWord(letters);
}

/// All freely reduced words of exactly length len over r generators, in order.
inline std::vector<FreeWord> reduced_words(int r, std::size_t len) {
    std::vector<FreeWord> out;
    if (len == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == len) {
            out.emplace_back(cur);
            return;
        }
        for (int rk = 0; rk < 2 * r; ++rk) {
            const int x = FreeWord::letter_of_rank(rk);
            if (!cur.empty() && cur.back() == -x) continue;
            cur.push_back(x);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

/// Number of reduced words of length len: 2r(2r-1)^(len-1).
inline std::size_t reduced_word_count(int r, std::size_t len) {
    if (len == 0) return 1;
    std::size_t c = 2 * static_cast<std::size_t>(r);
    for (std::size_t k = 1; k < len; ++k) c *= 2 * static_cast<std::size_t>(r) - 1;
    return c;
}

/// Positive words (no inverse letters) of exactly length len, in order.
inline std::vector<FreeWord> positive_words(int r, std::size_t len) {
    std::vector<FreeWord> out;
    std::vector<int> cur(len, 1);
    if (r < 1) return out;
    while (true) {
        out.emplace_back(cur);
        std::size_t k = len;
        while (k > 0 && cur[k - 1] == r) cur[--k] = 1;
        if (k == 0) break;
        ++cur[k - 1];
    }
    return out;
}

/// Word in the universal Coxeter group on delta_0..delta_r; adjacent equal
/// letters cancel.
class CoxWord {
   public:
    CoxWord() = default;
    explicit CoxWord(const std::vector<std::size_t>& letters) {
        for (std::size_t x : letters) push(x);
    }

    const std::vector<std::size_t>& letters() const noexcept { return w_; }
    std::size_t length() const noexcept { return w_.size(); }

    friend CoxWord operator*(CoxWord a, const CoxWord& b) {
        for (std::size_t x : b.w_) a.push(x);
        return a;
    }
    friend bool operator==(const CoxWord& a, const CoxWord& b) { return a.w_ == b.w_; }

    std::string to_string() const {
        if (w_.empty()) return "1";
        std::string s;
        for (std::size_t k = 0; k < w_.size(); ++k) {
            if (k) s += '*';
            s += 'd' + std::to_string(w_[k]);
        }
        return s;
    }

   private:
    void push(std::size_t x) {
        if (!w_.empty() && w_.back() == x) w_.pop_back();
        else w_.push_back(x);
    }

    std::vector<std::size_t> w_;
};

}  // namespace burnside

#endif
