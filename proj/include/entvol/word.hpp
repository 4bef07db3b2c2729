#pragma once

// Cyclic words over {L, R} representing pseudo-Anosov conjugacy classes of
// the once-punctured torus.  A class is determined by the word up to cyclic
// rotation; the canonical representative is the lexicographically smallest
// rotation (L < R).

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "entvol/errors.hpp"

namespace entvol {

namespace detail {

// Lexicographically least rotation, O(N^2).  N stays small (a few hundred).
inline std::string least_rotation(const std::string& s) {
    const std::size_t n = s.size();
    std::string best = s;
    std::string cur = s;
    for (std::size_t i = 1; i < n; ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

}  // namespace detail

class CyclicWord {
public:
    // Block (m_i, n_i): maximal L-run followed by maximal R-run, reading the
    // canonical rotation (which always starts with L and ends with R).
    using Block = std::pair<int, int>;

    static CyclicWord parse(const std::string& text) {
        if (text.empty()) throw parse_error("empty word");
        std::string letters;
        letters.reserve(text.size());
        bool has_l = false, has_r = false;
        for (char c : text) {
            const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (u == 'L') { letters.push_back('L'); has_l = true; }
            else if (u == 'R') { letters.push_back('R'); has_r = true; }
            else throw parse_error(std::string("illegal character '") + c + "' in word");
        }
        if (!has_l || !has_r)
            throw not_pseudo_anosov("not pseudo-Anosov: word must contain both L and R");
        return CyclicWord(std::move(letters));
    }

    const std::string& letters() const { return letters_; }
    const std::string& canonical() const { return canonical_; }
    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<Block>& blocks() const { return blocks_; }
    int block_length() const { return static_cast<int>(blocks_.size()); }

    CyclicWord canonicalize() const { return CyclicWord(std::string(canonical_)); }

    CyclicWord rotate(int j) const {
        const int n = length();
        std::string s = letters_;
        const int k = ((j % n) + n) % n;
        std::rotate(s.begin(), s.begin() + k, s.end());
        return CyclicWord(std::move(s));
    }

    CyclicWord reverse() const {
        std::string s(letters_.rbegin(), letters_.rend());
        return CyclicWord(std::move(s));
    }

    CyclicWord swap() const {
        std::string s = letters_;
        for (char& c : s) c = (c == 'L') ? 'R' : 'L';
        return CyclicWord(std::move(s));
    }

    CyclicWord power(int m) const {
        if (m < 1) throw parse_error("power exponent must be >= 1");
        std::string s;
        s.reserve(letters_.size() * static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) s += letters_;
        return CyclicWord(std::move(s));
    }

    friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
        return a.canonical_ == b.canonical_;
    }
    friend bool operator!=(const CyclicWord& a, const CyclicWord& b) { return !(a == b); }

private:
    explicit CyclicWord(std::string letters)
        : letters_(std::move(letters)), canonical_(detail::least_rotation(letters_)) {
        // Canonical form of a mixed word starts with L and ends with R, so
        // the block decomposition reads off directly.
        std::size_t i = 0;
        const std::size_t n = canonical_.size();
        while (i < n) {
            int m = 0, k = 0;
            while (i < n && canonical_[i] == 'L') { ++m; ++i; }
            while (i < n && canonical_[i] == 'R') { ++k; ++i; }
            blocks_.emplace_back(m, k);
        }
        check_blocks();
    }

    void check_blocks() const {
        int total = 0;
        for (auto [m, k] : blocks_) total += m + k;
        if (total != length())
            throw internal_gluing_error("block decomposition does not cover the word");
    }

    std::string letters_;
    std::string canonical_;
    std::vector<Block> blocks_;
};

// All canonical mixed binary necklaces with min_len <= N <= max_len, sorted
// by (N, lexicographic).  FKM necklace generation (Fredricksen-Kessler-
// Maiorana): pre-necklaces via Duval's recursion, keep those with n % p == 0.
inline std::vector<CyclicWord> enumerate_words(int min_len, int max_len) {
    if (min_len < 2 || min_len > max_len)
        throw parse_error("enumerate requires 2 <= min_len <= max_len");
    std::vector<CyclicWord> out;
    for (int n = min_len; n <= max_len; ++n) {
        std::string a(static_cast<std::size_t>(n) + 1, 'L');  // 1-based scratch
        std::vector<std::string> necklaces;
        auto gen = [&](auto&& self, int t, int p) -> void {
            if (t > n) {
                if (n % p == 0) necklaces.emplace_back(a.begin() + 1, a.end());
                return;
            }
            a[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(t - p)];
            self(self, t + 1, p);
            if (a[static_cast<std::size_t>(t - p)] == 'L') {
                a[static_cast<std::size_t>(t)] = 'R';
                self(self, t + 1, t);
            }
        };
        gen(gen, 1, 1);
        for (const auto& s : necklaces) {
            bool has_l = s.find('L') != std::string::npos;
            bool has_r = s.find('R') != std::string::npos;
            if (has_l && has_r) out.push_back(CyclicWord::parse(s));
        }
    }
    return out;
}

}  // namespace entvol
