#include <doctest.h>

#include "finprime/algebra.hpp"
#include "finprime/classifier.hpp"
#include "finprime/gadgets.hpp"
#include "finprime/oracle.hpp"
#include "finprime/random.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "profiles.hpp"

using namespace finprime;
namespace to = testing_oracle;

namespace {

Word w_of(const Dfa& a, const char* text) { return parse_word(a.alphabet(), text); }

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("profile of the three-letter safety automaton") {
    Dfa a = load_dfa("fig4.dfa");
    auto p = linear_profile(a);
    REQUIRE(p);
    CHECK(p->n == 3);
    const Letter a1 = 0, a2 = 1, a3 = 2;
    CHECK(p->sigma(0, 1) == std::vector<Letter>{a1, a2});
    CHECK(p->sigma(0, 2) == std::vector<Letter>{a3});
    CHECK(p->sigma(2, 3) == std::vector<Letter>{a3});
    CHECK(p->sigma(1, 2) == std::vector<Letter>{a2, a3});
    CHECK(p->sigma(3, 4) == std::vector<Letter>{a1, a2, a3});
    CHECK(is_safety(a));
    CHECK(!is_cosafety(a));
    CHECK(!uniform_max_word_letter(*p));
    CHECK(!interior_rejecting_state(*p));
    auto cep = has_cep(*p);
    CHECK(!cep.has_cep);
    REQUIRE(cep.breaching);
    CHECK(*cep.breaching == w_of(a, "a1 a2 a3"));
}

TEST_CASE("non-linear and trivial profiles") {
    CHECK(!linear_profile(load_dfa("ab_ba.dfa")));
    Alphabet al{"a", "b"};
    auto eps = linear_profile(to::trie_dfa(al, {Word{}}));
    REQUIRE(eps);
    CHECK(eps->n == 0);
    CHECK(eps->sigma(0, 1) == std::vector<Letter>{0, 1});
    CHECK(uniform_max_word_letter(*eps) == Letter{0});
    CHECK_THROWS_AS(has_cep(*eps), InputError);
    CHECK_THROWS(linear_profile(empty_dfa(al)));
    CHECK_THROWS(linear_profile(universal_dfa(al)));
}

TEST_CASE("linear profile exists exactly when the index is n+2") {
    Rng rng(17);
    Alphabet al{"a", "b"};
    for (int i = 0; i < 200; ++i) {
        Dfa a = random_adfa(rng, 2 + rng() % 6, al);
        if (is_empty(a).empty) continue;
        auto p = linear_profile(a);
        CHECK(p.has_value() == (index_of(a) == longest_word_length(a).length + 2));
        if (p) {
            // relabeled base accepts the same language, states strictly forward
            CHECK(equivalent(p->base, a).equivalent);
            for (std::size_t q = 0; q <= p->n; ++q)
                for (Letter x = 0; x < p->letters(); ++x) CHECK(p->step(q, x) > q);
        }
    }
}

TEST_CASE("safety, co-safety and simple co-safety") {
    Alphabet al{"a", "b"};
    CHECK(is_safety(universal_dfa(al)));
    CHECK(is_cosafety(empty_dfa(al)));
    CHECK(!is_simple_cosafety(empty_dfa(al)));
    CHECK(is_simple_cosafety(load_dfa("accept_sink.dfa")) == false);  // the path is a chain, not a cycle
    Dfa sp = sprime_gadget(parse_digraph(read_data("path.graph")));
    CHECK(is_cosafety(sp));
    CHECK(is_simple_cosafety(sp));

    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        Dfa a = random_dfa(rng, 1 + rng() % 6, al);
        CHECK(is_safety(a) == is_cosafety(complement(a)));
        // safety: a rejected word stays rejected under any extension
        bool closed = true;
        for (const Word& w : to::all_words(2, 4))
            if (!to::naive_accepts(a, w))
                for (const Word& v : to::all_words(2, 3)) {
                    Word wv = w;
                    wv.insert(wv.end(), v.begin(), v.end());
                    closed = closed && !to::naive_accepts(a, wv);
                }
        if (is_safety(a)) CHECK(closed);
    }
}

TEST_CASE("uniform maximal word letter") {
    Dfa a = load_dfa("eps_a.dfa");
    auto p = linear_profile(a);
    REQUIRE(p);
    CHECK(uniform_max_word_letter(*p) == Letter{0});
}

TEST_CASE("CEP on small hand-checked profiles") {
    Dfa four = load_dfa("eps_a_b_ab.dfa");
    auto p = linear_profile(four);
    REQUIRE(p);
    CHECK(has_cep(*p).has_cep);

    Dfa five = load_dfa("prime5.dfa");
    auto q = linear_profile(five);
    REQUIRE(q);
    auto r = has_cep(*q);
    CHECK(!r.has_cep);
    REQUIRE(r.breaching);
    CHECK(*r.breaching == w_of(five, "a a b"));

    auto one = linear_profile(load_dfa("eps_a.dfa"));
    auto c1 = has_cep(*one);
    CHECK(!c1.has_cep);
    CHECK(*c1.breaching == Word{0});
}

TEST_CASE("interior rejecting state") {
    auto p = linear_profile(load_dfa("b_ab.dfa"));
    REQUIRE(p);
    CHECK(interior_rejecting_state(*p) == std::size_t{0});
}

TEST_CASE("every letter has a gap when no uniform maximal word exists") {
    Rng rng(33);
    Alphabet al{"0", "1", "2"};
    for (int i = 0; i < 200; ++i) {
        auto p = linear_profile(random_linear(rng, 1 + rng() % 6, al, rng() % 2 == 0));
        REQUIRE(p);
        if (uniform_max_word_letter(*p)) continue;
        for (Letter x = 0; x < 3; ++x) CHECK(last_gap_position(*p, x).has_value());
    }
}

TEST_CASE("has_cep agrees with the definition on all safety profiles up to n = 4") {
    Alphabet al{"0", "1"};
    std::size_t total = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        to::for_each_linear(n, al, std::vector<char>(n, 1), [&](const Dfa& a) {
            ++total;
            auto p = linear_profile(a);
            REQUIRE(p);
            auto r = has_cep(*p);
            CHECK(r.has_cep == to::brute_cep(to::language_upto(a, n), n));
            CHECK(r.has_cep == oracle_cep(*p));
            if (!r.has_cep) {
                // breaching word: accepted, maximal, and no compression lands in q_n or the sink
                const Word& w = *r.breaching;
                CHECK(w.size() == n);
                CHECK(to::naive_accepts(a, w));
                for (std::size_t i = 0; i + 2 <= n; ++i)
                    for (std::size_t l = 2; l <= n - i; ++l) {
                        Word c(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                        c.insert(c.end(), w.begin() + static_cast<std::ptrdiff_t>(i + l - 1), w.end());
                        State q = run(p->base, c);
                        CHECK(q != n);
                        CHECK(q != n + 1);
                    }
            }
        });
    CHECK(total == 3 + 3 * 5 + 3 * 5 * 7 + 3 * 5 * 7 * 9);
}

TEST_CASE("has_cep agrees with the definition on non-safety profiles") {
    Rng rng(12);
    Alphabet al{"0", "1", "2"};
    for (int i = 0; i < 150; ++i) {
        std::size_t n = 1 + rng() % 5;
        Dfa a = random_linear(rng, n, al, false);
        auto p = linear_profile(a);
        REQUIRE(p);
        CHECK(has_cep(*p).has_cep == to::brute_cep(to::language_upto(a, n), n));
    }
}

}
