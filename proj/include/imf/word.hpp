#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "imf/cf.hpp"
#include "imf/psi.hpp"

namespace imf {

// One letter of the merged-denominator word: the value is a denominator of
// alpha (Q), of beta (T), or of both (B).  Indices are the largest attaining
// the value, matching the psi convention.
struct WordLetter {
    char kind;  // 'B', 'Q' or 'T'
    Int value;
    std::optional<long> alphaIndex;
    std::optional<long> betaIndex;
};

struct Word {
    std::vector<WordLetter> letters;

    std::string compact() const {
        std::string s;
        for (auto& l : letters) s += l.kind;
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Word& w) {
        for (auto& l : w.letters) {
            os << l.kind;
            if (l.alphaIndex) os << " " << *l.alphaIndex;
            if (l.betaIndex) os << " " << *l.betaIndex;
            os << " " << l.value << "\n";
        }
        return os;
    }
};

// Merge the two denominator sequences up to valueLimit; each distinct value
// becomes one letter (the duplicate q_0 = q_1 = 1 collapses to the larger
// index, and value 1 is always a B: both sequences start at 1).
inline Word buildWord(const PartialQuotients& x, const PartialQuotients& y,
                      const Int& valueLimit) {
    if (valueLimit < 1) throw Error(ErrorKind::Parse, "word valueLimit must be >= 1");
    auto dedupe = [](std::vector<Convergent> cs) {
        std::vector<Convergent> out;
        for (size_t i = 0; i < cs.size(); ++i)
            if (i + 1 == cs.size() || cs[i + 1].q != cs[i].q) out.push_back(cs[i]);
        return out;
    };
    auto qa = dedupe(convergents_up_to_value(x, valueLimit));
    auto qb = dedupe(convergents_up_to_value(y, valueLimit));
    Word w;
    size_t i = 0, j = 0;
    while (i < qa.size() || j < qb.size()) {
        bool takeA = j == qb.size() || (i < qa.size() && qa[i].q <= qb[j].q);
        bool takeB = i == qa.size() || (j < qb.size() && qb[j].q <= qa[i].q);
        WordLetter l;
        if (takeA && takeB) {
            l = {'B', qa[i].q, qa[i].n, qb[j].n};
            ++i; ++j;
        } else if (takeA) {
            l = {'Q', qa[i].q, qa[i].n, std::nullopt};
            ++i;
        } else {
            l = {'T', qb[j].q, std::nullopt, qb[j].n};
            ++j;
        }
        w.letters.push_back(std::move(l));
    }
    return w;
}

inline std::vector<size_t> scanBB(const Word& w) {
    std::vector<size_t> out;
    for (size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (w.letters[i].kind == 'B' && w.letters[i + 1].kind == 'B') out.push_back(i);
    return out;
}

// B Q B with the sandwiched alpha-quotient a_{n+1} = 1, n the Q's index.
inline std::vector<size_t> scanBQB(const Word& w, const PartialQuotients& x) {
    std::vector<size_t> out;
    for (size_t i = 0; i + 2 < w.letters.size(); ++i) {
        if (w.letters[i].kind != 'B' || w.letters[i + 1].kind != 'Q' ||
            w.letters[i + 2].kind != 'B')
            continue;
        long n = *w.letters[i + 1].alphaIndex;
        if (x.quotient(n + 1) == 1) out.push_back(i);
    }
    return out;
}

inline std::vector<size_t> scanQQ(const Word& w) {
    std::vector<size_t> out;
    for (size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (w.letters[i].kind == 'Q' && w.letters[i + 1].kind == 'Q') out.push_back(i);
    return out;
}

// Quotients of alpha strictly between consecutive B letters; extremal pairs
// are expected to show only values in {1, 2} here (reported, not asserted).
struct InteriorQuotientReport {
    std::vector<Int> observed;  // distinct quotient values seen
    bool all_in_12 = true;
};

inline InteriorQuotientReport interiorQuotients(const Word& w, const PartialQuotients& x) {
    InteriorQuotientReport rep;
    std::optional<long> lastB;
    auto note = [&](const Int& a) {
        for (auto& v : rep.observed)
            if (v == a) return;
        rep.observed.push_back(a);
        if (a != 1 && a != 2) rep.all_in_12 = false;
    };
    for (auto& l : w.letters) {
        if (l.kind != 'B') continue;
        long n = *l.alphaIndex;
        if (lastB)
            for (long i = *lastB + 1; i <= n; ++i) note(x.quotient(i));
        lastB = n;
    }
    return rep;
}

}  // namespace imf
