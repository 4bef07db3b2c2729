#include <catch_amalgamated.hpp>

#include <set>

#include "entvol/word.hpp"

using entvol::CyclicWord;

TEST_CASE("parse accepts mixed words and records block data") {
    const CyclicWord w = CyclicWord::parse("LR");
    CHECK(w.length() == 2);
    CHECK(w.block_length() == 1);
    CHECK(w.blocks() == std::vector<CyclicWord::Block>{{1, 1}});

    const CyclicWord u = CyclicWord::parse("LLRRRLR");
    CHECK(u.length() == 7);
    CHECK(u.block_length() == 2);
    CHECK(u.blocks() == std::vector<CyclicWord::Block>{{2, 3}, {1, 1}});
}

TEST_CASE("parse is case-insensitive and preserves rotation") {
    const CyclicWord w = CyclicWord::parse("rLl");
    CHECK(w.letters() == "RLL");
    CHECK(w.canonical() == "LLR");
}

TEST_CASE("parse rejects bad input") {
    CHECK_THROWS_AS(CyclicWord::parse(""), entvol::parse_error);
    CHECK_THROWS_AS(CyclicWord::parse("LXR"), entvol::parse_error);
    CHECK_THROWS_AS(CyclicWord::parse("LL"), entvol::not_pseudo_anosov);
    CHECK_THROWS_AS(CyclicWord::parse("RRRR"), entvol::not_pseudo_anosov);
}

TEST_CASE("canonicalize picks the least rotation and is idempotent") {
    CHECK(CyclicWord::parse("RL").canonical() == "LR");
    CHECK(CyclicWord::parse("LLRLR").canonical() == "LLRLR");
    CHECK(CyclicWord::parse("RRL").canonical() == "LRR");
    const CyclicWord c = CyclicWord::parse("RRLRL").canonicalize();
    CHECK(c.canonicalize().letters() == c.letters());
}

TEST_CASE("transforms") {
    CHECK(CyclicWord::parse("LLR").swap().letters() == "RRL");
    CHECK(CyclicWord::parse("LLR").swap().canonical() == "LRR");
    CHECK(CyclicWord::parse("LR").power(2).letters() == "LRLR");
    CHECK(CyclicWord::parse("LLR").reverse().letters() == "RLL");
    CHECK(CyclicWord::parse("LLR").reverse().canonical() == "LLR");
    CHECK(CyclicWord::parse("LLRR").rotate(1).letters() == "LRRL");
}

TEST_CASE("rotation invariance of the canonical form") {
    const CyclicWord w = CyclicWord::parse("LLRRLRLRR");
    for (int j = 0; j < w.length(); ++j) {
        const CyclicWord r = w.rotate(j);
        CHECK(r.canonical() == w.canonical());
        CHECK(r.block_length() == w.block_length());
        CHECK(r == w);
    }
}

TEST_CASE("block length invariant under swap and reverse") {
    for (const auto& w : entvol::enumerate_words(2, 8)) {
        CHECK(w.swap().block_length() == w.block_length());
        CHECK(w.reverse().block_length() == w.block_length());
    }
}

TEST_CASE("enumerate matches the stated small cases") {
    auto names = [](const std::vector<CyclicWord>& ws) {
        std::vector<std::string> out;
        for (const auto& w : ws) out.push_back(w.canonical());
        return out;
    };
    CHECK(names(entvol::enumerate_words(2, 2)) == std::vector<std::string>{"LR"});
    CHECK(names(entvol::enumerate_words(3, 3)) == std::vector<std::string>{"LLR", "LRR"});
    CHECK(names(entvol::enumerate_words(4, 4)) ==
          std::vector<std::string>{"LLLR", "LLRR", "LRLR", "LRRR"});
}

namespace {

// Independent oracle: scan all 2^n letter strings, canonicalize by brute
// force, and collect the distinct mixed classes.
std::set<std::string> brute_force_classes(int n) {
    std::set<std::string> out;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::string s;
        for (int b = n - 1; b >= 0; --b) s.push_back((mask >> b) & 1u ? 'R' : 'L');
        out.insert(entvol::detail::least_rotation(s));
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate agrees with brute force and has no duplicates") {
    for (int n = 2; n <= 12; ++n) {
        const auto ws = entvol::enumerate_words(n, n);
        std::set<std::string> got;
        for (const auto& w : ws) {
            CHECK(w.length() == n);
            CHECK(got.insert(w.canonical()).second);  // no duplicates
        }
        CHECK(got == brute_force_classes(n));
    }
}

TEST_CASE("enumerate output is sorted by length then lexicographic") {
    const auto ws = entvol::enumerate_words(2, 7);
    for (std::size_t i = 1; i < ws.size(); ++i) {
        const auto& a = ws[i - 1];
        const auto& b = ws[i];
        CHECK((a.length() < b.length() ||
               (a.length() == b.length() && a.canonical() < b.canonical())));
    }
}
