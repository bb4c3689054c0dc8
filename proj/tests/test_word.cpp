#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "imf/word.hpp"

using namespace imf;

TEST_CASE("golden word for (tau, theta) up to 30") {
    Word w = buildWord(golden_ratio_cf(), silver_ratio_cf(), 30);
    CHECK(w.compact() == "BBQBQTQQT");
    // values follow the merged denominators
    std::vector<Int> vals;
    for (auto& l : w.letters) vals.push_back(l.value);
    CHECK(vals == std::vector<Int>{1, 2, 3, 5, 8, 12, 13, 21, 29});
    // first letter is the shared value 1 with the largest indices
    CHECK(w.letters[0].kind == 'B');
    CHECK(*w.letters[0].alphaIndex == 1);  // q_0 = q_1 = 1 resolves upward
    CHECK(*w.letters[0].betaIndex == 0);
    // serialization: B n s value / Q n value / T s value
    std::ostringstream os;
    os << w;
    CHECK(os.str().substr(0, 15) == "B 1 0 1\nB 2 1 2");
}

TEST_CASE("degenerate identical pair gives all B") {
    Word w = buildWord(golden_ratio_cf(), golden_ratio_cf(), 1000);
    for (auto& l : w.letters) CHECK(l.kind == 'B');
    CHECK(scanBB(w).size() == w.letters.size() - 1);
    CHECK(scanQQ(w).empty());
}

TEST_CASE("letters partition values with strictly increasing values") {
    auto om = PartialQuotients::periodic(0, {2, 2, 1}, {2});
    Word w = buildWord(silver_ratio_cf(), om, 100000);
    Int prev = 0;
    bool sawQ = false, sawT = false;
    for (auto& l : w.letters) {
        CHECK(l.value > prev);
        prev = l.value;
        CHECK((l.kind == 'B' || l.kind == 'Q' || l.kind == 'T'));
        CHECK((l.kind != 'B' || (l.alphaIndex && l.betaIndex)));
        CHECK((l.kind != 'Q' || (l.alphaIndex && !l.betaIndex)));
        CHECK((l.kind != 'T' || (!l.alphaIndex && l.betaIndex)));
        sawQ |= l.kind == 'Q';
        sawT |= l.kind == 'T';
    }
    CHECK(sawQ);
    CHECK(sawT);
}

TEST_CASE("scan positions on the (tau, theta) word") {
    Word w = buildWord(golden_ratio_cf(), silver_ratio_cf(), 30);
    CHECK(scanBB(w) == std::vector<size_t>{0});
    CHECK(scanQQ(w) == std::vector<size_t>{6});  // Q(13) Q(21)
    // no BQB with a_{n+1} = 1 in this prefix: the single BQB has a_{n+1} = 1?
    auto bqb = scanBQB(w, golden_ratio_cf());
    // B(2) Q(3) B(5): n = 3, a_4 = 1 for tau, so it qualifies
    CHECK(bqb == std::vector<size_t>{1});
}

TEST_CASE("BB count stabilizes for the constructed pair") {
    auto om = PartialQuotients::periodic(0, {2, 2, 1}, {2});
    size_t last = scanBB(buildWord(silver_ratio_cf(), om, 1000)).size();
    for (Int lim(10000); lim <= 100000000; lim *= 10) {
        size_t now = scanBB(buildWord(silver_ratio_cf(), om, lim)).size();
        CHECK(now >= last);
        last = now;
    }
    // stabilized: the doubled horizon adds no BB
    CHECK(scanBB(buildWord(silver_ratio_cf(), om, Int("200000000"))).size() == last);
}

TEST_CASE("QQ grows without bound for (tau, theta)") {
    size_t prev = 0;
    for (Int lim(1000); lim <= 1000000000; lim *= 1000) {
        size_t now = scanQQ(buildWord(golden_ratio_cf(), silver_ratio_cf(), lim)).size();
        CHECK(now > prev);
        prev = now;
    }
}

TEST_CASE("lemma 4 restated on word letters") {
    Word w = buildWord(golden_ratio_cf(), silver_ratio_cf(), 100000);
    auto a = golden_ratio_cf(), b = silver_ratio_cf();
    for (auto& lq : w.letters) {
        if (!lq.alphaIndex || !lq.betaIndex) continue;
        long n = *lq.alphaIndex - 1, s = *lq.betaIndex;
        if (n < 2 || s < 2) continue;
        // here q_{n+1} = t_s = value
        CHECK((Quartic(*xi(a, n - 1).exact) - Quartic(*xi(b, s - 1).exact)).sign() > 0);
    }
}

TEST_CASE("interior quotients of the extremal pair stay in {1,2}") {
    auto om = PartialQuotients::periodic(0, {2, 2, 1}, {2});
    Word w = buildWord(silver_ratio_cf(), om, 10000000);
    auto rep = interiorQuotients(w, silver_ratio_cf());
    CHECK(rep.all_in_12);
}
