#include <doctest.h>

#include "finprime/algebra.hpp"
#include "finprime/classifier.hpp"
#include "finprime/factories.hpp"
#include "finprime/primality.hpp"
#include "finprime/random.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "profiles.hpp"

using namespace finprime;
namespace to = testing_oracle;

namespace {

const Alphabet ab{"a", "b"};

Word w_of(const char* text) { return parse_word(ab, text); }

std::vector<Word> accepted(const Dfa& a, std::size_t max_len) {
    std::vector<Word> out;
    for (const Word& w : to::all_words(a.letters(), max_len))
        if (to::naive_accepts(a, w)) out.push_back(w);
    return out;
}

// every word of the profile's language is accepted by f
void check_contains(const LinearProfile& p, const Dfa& f) {
    for (const Word& w : to::language_upto(p.base, p.n)) CHECK(to::naive_accepts(f, w));
}

}  // namespace

TEST_SUITE("factories") {

TEST_CASE("singleton automaton") {
    Dfa e = singleton_dfa(Word{}, ab);
    CHECK(e.size() == 2);
    CHECK(accepted(e, 4) == std::vector<Word>{Word{}});
    Dfa s = singleton_dfa(w_of("a b"), ab);
    CHECK(s.size() == 4);
    CHECK(enumerate_language(s, 4) == std::vector<Word>{w_of("a b")});
    CHECK(accepted(s, 5) == std::vector<Word>{w_of("a b")});
}

TEST_CASE("length cap automaton") {
    Dfa z = length_cap_dfa(0, ab);
    CHECK(accepted(z, 4) == std::vector<Word>{Word{}});
    Dfa two = length_cap_dfa(2, ab);
    CHECK(two.size() == 4);
    CHECK(accepted(two, 6).size() == 7);
}

TEST_CASE("star of a word") {
    Dfa s = star_word_dfa(w_of("a b"), ab);
    CHECK(s.size() == 3);
    CHECK(accepted(s, 4) == std::vector<Word>{Word{}, w_of("a b"), w_of("a b a b")});
    CHECK(!to::naive_accepts(s, w_of("a")));
    CHECK(!to::naive_accepts(s, w_of("a b a")));
}

TEST_CASE("letter count automaton") {
    Dfa zero = letter_count_dfa(0, 0, ab);
    for (const Word& w : to::all_words(2, 6)) {
        bool only_b = std::count(w.begin(), w.end(), 0u) == 0;
        CHECK(to::naive_accepts(zero, w) == only_b);
    }
    Dfa two = letter_count_dfa(0, 2, ab);
    CHECK(two.size() == 4);
    CHECK(to::naive_accepts(two, w_of("b a a b")));
    CHECK(to::naive_accepts(two, w_of("a a")));
    CHECK(!to::naive_accepts(two, w_of("a a a")));
}

TEST_CASE("modular counters") {
    Dfa six = mod_counter_dfa(6);
    CHECK(six.size() == 6);
    CHECK(accepts(six, Word(6, 1)));
    CHECK(!accepts(six, Word(3, 1)));
    Dfa one = mod_counter_dfa(1);
    for (const Word& w : to::all_words(2, 5)) CHECK(to::naive_accepts(one, w));
    CHECK(equivalent(product(mod_counter_dfa(2), mod_counter_dfa(3), ProductMode::Intersect), six).equivalent);
    CHECK_THROWS_AS(mod_counter_dfa(0), InputError);
}

TEST_CASE("loop factors on the {b, ab} profile") {
    auto p = linear_profile(load_dfa("b_ab.dfa"));
    REQUIRE(p);
    Dfa z = factor_loop_zero(*p);
    CHECK(z.size() == p->n + 1);
    CHECK(to::naive_accepts(z, w_of("b")));
    check_contains(*p, z);
    Dfa d = factor_loop_d(*p, 0);
    CHECK(d.size() == p->n + 1);
    CHECK(!to::naive_accepts(d, Word{}));
    CHECK(!to::naive_accepts(d, w_of("a")));
    check_contains(*p, d);
}

TEST_CASE("index chains enumerate every interior subset but the full one") {
    CHECK(index_chains(1).empty());
    CHECK(index_chains(2) == std::vector<IndexChain>{{0, 2}});
    CHECK(index_chains(4).size() == 7);  // 2^3 - 1
}

TEST_CASE("chain factors: size laws and rejection of b-then-anything") {
    auto p = linear_profile(load_dfa("b_ab.dfa"));
    REQUIRE(p);
    Dfa c = factor_chain(*p, {0, 2});
    CHECK(c.size() == p->n + 1);  // m = n-1
    for (Letter x = 0; x < 2; ++x) CHECK(!to::naive_accepts(c, Word{1, x}));
    check_contains(*p, c);

    Rng rng(4);
    Alphabet al{"0", "1", "2"};
    for (int i = 0; i < 30; ++i) {
        auto q = linear_profile(random_linear(rng, 2 + rng() % 4, al, rng() % 2 == 0));
        for (const IndexChain& ch : index_chains(q->n)) {
            Dfa f = factor_chain(*q, ch);
            std::size_t m = ch.size() - 1;
            CHECK(f.size() == (m < q->n - 1 ? m + 3 : q->n + 1));
            CHECK(f.size() < q->n + 2);
            check_contains(*q, f);
        }
    }
}

TEST_CASE("letter position factor") {
    Dfa five = load_dfa("prime5.dfa");
    auto p = linear_profile(five);
    REQUIRE(p);
    Dfa f = factor_letter_position(*p, 0, 3);
    CHECK(f.size() == p->n + 1);
    CHECK(!to::naive_accepts(f, w_of("a a a a")));
    check_contains(*p, f);
    CHECK_THROWS_AS(factor_letter_position(*p, 1, 3), InputError);  // b moves q_2 to q_3
}

TEST_CASE("subsequence excluder agrees with a direct subsequence test") {
    Dfa s = subsequence_excluder(w_of("a b"), ab);
    CHECK(s.size() == 3);
    CHECK(!to::naive_accepts(s, w_of("a b")));
    CHECK(!to::naive_accepts(s, w_of("a a b")));
    CHECK(to::naive_accepts(s, w_of("b a")));
    CHECK(to::naive_accepts(s, w_of("a a")));
    for (const Word& u : to::all_words(2, 4)) CHECK(!to::naive_accepts(subsequence_excluder(Word{}, ab), u));
    Alphabet al{"0", "1", "2"};
    for (const Word& w : to::all_words(3, 3)) {
        Dfa e = subsequence_excluder(w, al);
        CHECK(e.size() == w.size() + 1);
        for (const Word& u : to::all_words(3, w.size() + 2)) CHECK(to::naive_accepts(e, u) == !to::is_subsequence(w, u));
    }
}

TEST_CASE("skip factors contain the language and reject jumped extensions") {
    Rng rng(6);
    Alphabet al{"0", "1"};
    for (int r = 0; r < 40; ++r) {
        auto p = linear_profile(random_linear(rng, 2 + rng() % 4, al, true));
        const std::size_t n = p->n;
        for (std::size_t i = 0; i + 2 <= n; ++i)
            for (std::size_t l = 2; l <= n - i; ++l) {
                Dfa f = factor_skip(*p, i, l);
                CHECK(f.size() == n + 1);
                check_contains(*p, f);
                // a maximal word whose prefix of length i lands in q_i and whose (i+l)-th letter
                // jumps from q_i to q_{i+l} or beyond: every extension is rejected
                for (const Word& w : to::language_upto(p->base, n)) {
                    if (w.size() != n) continue;
                    Word pre(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                    if (run(p->base, pre) != i) continue;
                    if (p->step(i, w[i + l - 1]) < i + l) continue;
                    for (const Word& v : to::all_words(2, 3)) {
                        if (v.empty()) continue;
                        Word wv = w;
                        wv.insert(wv.end(), v.begin(), v.end());
                        CHECK(!to::naive_accepts(f, wv));
                    }
                }
            }
    }
    auto p = linear_profile(load_dfa("fig4.dfa"));
    CHECK_THROWS_AS(factor_skip(*p, 2, 2), InputError);
}

TEST_CASE("extension factors reject their word and keep the language") {
    Rng rng(10);
    Alphabet al{"0", "1"};
    std::size_t built = 0;
    for (int r = 0; r < 200 && built < 300; ++r) {
        auto p = linear_profile(random_linear(rng, 3 + rng() % 3, al, false));
        auto d = interior_rejecting_state(*p);
        // extension factors belong to the branch without a uniform maximal word
        if (!d || uniform_max_word_letter(*p)) continue;
        for (const Word& w : extension_candidates(*p)) {
            Dfa f = factor_extension(*p, *d, w);
            ++built;
            CHECK(f.size() == p->n + 1);
            std::size_t rejecting = 0;
            for (State q = 0; q < f.size(); ++q) rejecting += f.accepting(q) ? 0 : 1;
            CHECK(rejecting == 1);
            CHECK(!f.accepting(static_cast<State>(*d)));
            CHECK(!to::naive_accepts(f, w));
            check_contains(*p, f);
        }
    }
    CHECK(built > 0);
}

TEST_CASE("extension factors refuse lengths outside n+1..2n-2") {
    auto p = linear_profile(load_dfa("b_ab.dfa"));
    REQUIRE(p);
    CHECK_THROWS_AS(factor_extension(*p, 0, w_of("a b b")), InputError);
}

}
