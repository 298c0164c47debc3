#include "finprime/factories.hpp"

#include <algorithm>

#include "finprime/algebra.hpp"

namespace finprime {
namespace {

Dfa blank(const Alphabet& alphabet, std::size_t states, const std::string& name) {
    Dfa a(alphabet, states, 0);
    a.set_name(name);
    return a;
}

void make_sink(Dfa& a, State q) {
    for (Letter x = 0; x < a.letters(); ++x) a.set_transition(q, x, q);
}

void accept_all_but(Dfa& a, State rejecting) {
    for (State q = 0; q < a.size(); ++q) a.set_accepting(q, q != rejecting);
}

void check_word(const Word& w, const Alphabet& alphabet) {
    for (Letter x : w)
        if (x >= alphabet.size()) throw InputError("letter index out of range for the alphabet");
}

std::size_t count_letter(const Word& w, std::size_t from, std::size_t to, Letter a) {
    // 1-indexed positions from..to inclusive
    std::size_t c = 0;
    for (std::size_t k = from; k <= to && k <= w.size(); ++k)
        if (w[k - 1] == a) ++c;
    return c;
}

// The rows shared by the four extension automata: below `limit` copy the base automaton,
// keeping the state wherever the base would fall into the sink.
void copy_base_below(Dfa& a, const LinearProfile& p, std::size_t limit) {
    for (std::size_t j = 0; j < limit; ++j)
        for (Letter x = 0; x < p.letters(); ++x) {
            std::size_t t = p.step(j, x);
            a.set_transition(static_cast<State>(j), x, static_cast<State>(t == p.sink() ? j : t));
        }
}

}  // namespace

Dfa singleton_dfa(const Word& w, const Alphabet& alphabet) {
    check_word(w, alphabet);
    const std::size_t m = w.size();
    Dfa a = blank(alphabet, m + 2, "singleton");
    State sink = static_cast<State>(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        for (Letter x = 0; x < alphabet.size(); ++x)
            a.set_transition(static_cast<State>(i), x, i < m && w[i] == x ? static_cast<State>(i + 1) : sink);
    make_sink(a, sink);
    a.set_accepting(static_cast<State>(m));
    return a;
}

Dfa length_cap_dfa(std::size_t m, const Alphabet& alphabet) {
    Dfa a = blank(alphabet, m + 2, "cap");
    for (std::size_t i = 0; i <= m; ++i) {
        a.set_accepting(static_cast<State>(i));
        for (Letter x = 0; x < alphabet.size(); ++x) a.set_transition(static_cast<State>(i), x, static_cast<State>(i + 1));
    }
    make_sink(a, static_cast<State>(m + 1));
    return a;
}

Dfa star_word_dfa(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) throw InputError("star automaton needs a nonempty word");
    check_word(w, alphabet);
    const std::size_t m = w.size();
    Dfa a = blank(alphabet, m + 1, "star");
    State sink = static_cast<State>(m);
    for (std::size_t i = 0; i < m; ++i)
        for (Letter x = 0; x < alphabet.size(); ++x)
            a.set_transition(static_cast<State>(i), x, w[i] == x ? static_cast<State>((i + 1) % m) : sink);
    make_sink(a, sink);
    a.set_accepting(0);
    return a;
}

Dfa letter_count_dfa(Letter letter, std::size_t k, const Alphabet& alphabet) {
    if (letter >= alphabet.size()) throw InputError("letter index out of range for the alphabet");
    Dfa a = blank(alphabet, k + 2, "count");
    for (std::size_t i = 0; i <= k + 1; ++i)
        for (Letter x = 0; x < alphabet.size(); ++x) {
            std::size_t t = x == letter ? std::min(i + 1, k + 1) : i;
            a.set_transition(static_cast<State>(i), x, static_cast<State>(t));
        }
    a.set_accepting(static_cast<State>(k));
    return a;
}

Dfa mod_counter_dfa(std::size_t k) {
    if (k == 0) throw InputError("modulus must be at least 1");
    Dfa a = blank(Alphabet{"0", "1"}, k, "mod" + std::to_string(k));
    for (std::size_t i = 0; i < k; ++i) {
        a.set_transition(static_cast<State>(i), 0, static_cast<State>(i));
        a.set_transition(static_cast<State>(i), 1, static_cast<State>((i + 1) % k));
    }
    a.set_accepting(0);
    return a;
}

Dfa factor_loop_zero(const LinearProfile& p) {
    const std::size_t n = p.n;
    // q_0..q_{n-1} keep their ids, the sink q_{n+1} becomes id n
    auto id = [n](std::size_t j) { return static_cast<State>(j == n + 1 ? n : j); };
    Dfa a = blank(p.alphabet, n + 1, "loop0");
    for (std::size_t j = 0; j <= n + 1; ++j) {
        if (j == n) continue;
        for (Letter x = 0; x < p.letters(); ++x) {
            std::size_t t = p.step(j, x);
            a.set_transition(id(j), x, t == n ? 0 : id(t));
        }
        a.set_accepting(id(j), p.is_accepting(j) && j != n + 1);
    }
    a.set_accepting(0);
    return a;
}

Dfa factor_loop_d(const LinearProfile& p, std::size_t d) {
    const std::size_t n = p.n;
    if (d >= n) throw InputError("loop target d must be below n");
    Dfa a = blank(p.alphabet, n + 1, "loopd");
    for (std::size_t i = 0; i <= n; ++i) {
        a.set_accepting(static_cast<State>(i), p.is_accepting(i));
        for (Letter x = 0; x < p.letters(); ++x) {
            std::size_t t = i == n ? d : p.step(i, x);
            if (t == p.sink()) t = n;
            a.set_transition(static_cast<State>(i), x, static_cast<State>(t));
        }
    }
    return a;
}

std::vector<IndexChain> index_chains(std::size_t n) {
    std::vector<IndexChain> out;
    if (n < 2) return out;
    // every subset of the interior {1..n-1} except the full one gives a chain with m <= n-1
    const std::size_t interior = n - 1;
    for (std::size_t m = 1; m <= n - 1; ++m) {
        std::vector<char> pick(interior, 0);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m - 1), 1);
        do {
            IndexChain c{0};
            for (std::size_t k = 0; k < interior; ++k)
                if (pick[k]) c.push_back(k + 1);
            c.push_back(n);
            out.push_back(std::move(c));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

Dfa factor_chain(const LinearProfile& p, const IndexChain& c) {
    const std::size_t n = p.n;
    if (c.size() < 2 || c.front() != 0 || c.back() != n) throw InputError("chain must run from 0 to n");
    for (std::size_t k = 1; k < c.size(); ++k)
        if (c[k] <= c[k - 1]) throw InputError("chain indices must increase strictly");
    const std::size_t m = c.size() - 1;
    if (m > n - 1) throw InputError("chain length must be at most n-1");

    if (m < n - 1) {
        const State reject = static_cast<State>(m + 1), plus = static_cast<State>(m + 2);
        Dfa a = blank(p.alphabet, m + 3, "chain");
        for (std::size_t j = 0; j < m; ++j)
            for (Letter x = 0; x < p.letters(); ++x)
                a.set_transition(static_cast<State>(j), x,
                                 p.in_sigma(c[j], c[j + 1], x) ? static_cast<State>(j + 1) : plus);
        for (Letter x = 0; x < p.letters(); ++x) a.set_transition(static_cast<State>(m), x, reject);
        make_sink(a, reject);
        make_sink(a, plus);
        accept_all_but(a, reject);
        return a;
    }

    // m = n-1: exactly one interior index j is skipped
    std::size_t j = 1;
    while (j < n && c[j] == j) ++j;
    auto id = [j](std::size_t k) { return static_cast<State>(k < j ? k : k - 1); };
    Dfa a = blank(p.alphabet, n + 1, "chain");
    for (std::size_t k = 0; k <= n + 1; ++k) {
        if (k == j) continue;
        for (Letter x = 0; x < p.letters(); ++x) {
            std::size_t t = k;
            if (k == n + 1)
                t = k;
            else if (k == j - 1)
                t = p.in_sigma(j - 1, j + 1, x) ? j + 1 : k;
            else
                t = p.in_sigma(k, k + 1, x) ? k + 1 : k;
            a.set_transition(id(k), x, id(t));
        }
    }
    accept_all_but(a, id(n + 1));
    return a;
}

Dfa factor_letter_position(const LinearProfile& p, Letter letter, std::size_t i) {
    const std::size_t n = p.n;
    if (i < 1 || i > n) throw InputError("letter position must lie in 1..n");
    if (letter >= p.letters()) throw InputError("letter index out of range for the alphabet");
    if (p.in_sigma(i - 1, i, letter)) throw InputError("letter must not move q_{i-1} to q_i");
    Dfa a = blank(p.alphabet, n + 1, "letterpos");
    for (std::size_t j = 0; j < n; ++j)
        for (Letter x = 0; x < p.letters(); ++x) {
            std::size_t t = j == i - 1 ? (x == letter ? i : j) : j + 1;
            a.set_transition(static_cast<State>(j), x, static_cast<State>(t));
        }
    make_sink(a, static_cast<State>(n));
    accept_all_but(a, static_cast<State>(n));
    return a;
}

Dfa subsequence_excluder(const Word& w, const Alphabet& alphabet) {
    check_word(w, alphabet);
    const std::size_t m = w.size();
    Dfa a = blank(alphabet, m + 1, "subseq");
    for (std::size_t i = 0; i < m; ++i)
        for (Letter x = 0; x < alphabet.size(); ++x)
            a.set_transition(static_cast<State>(i), x, static_cast<State>(x == w[i] ? i + 1 : i));
    make_sink(a, static_cast<State>(m));
    accept_all_but(a, static_cast<State>(m));
    return a;
}

Dfa factor_skip(const LinearProfile& p, std::size_t i, std::size_t l) {
    const std::size_t n = p.n;
    if (n < 2 || i > n - 2 || l < 2 || l > n - i) throw InputError("skip parameters out of range");
    const std::size_t gap = i + l - 1;  // the omitted state
    auto id = [gap](std::size_t k) { return static_cast<State>(k < gap ? k : k - 1); };
    std::vector<char> jump(p.letters(), 0);  // Σ' = letters sending q_i to q_{i+l} or beyond
    for (Letter x = 0; x < p.letters(); ++x) jump[x] = p.step(i, x) >= i + l;

    Dfa a = blank(p.alphabet, n + 1, "skip");
    for (std::size_t j = 0; j <= n + 1; ++j) {
        if (j == gap) continue;
        for (Letter x = 0; x < p.letters(); ++x) {
            std::size_t t;
            if (j < i) {
                t = p.step(j, x);
                if (t == gap) t = i;
            } else if (j == i) {
                // for l = 2 the successor q_{i+1} is the omitted state and q_i waits instead
                t = jump[x] ? i + l : (l == 2 ? i : i + 1);
            } else if (j == i + l - 2) {
                t = i;
            } else if (j < n + 1) {
                t = j + 1;
            } else {
                t = n + 1;
            }
            a.set_transition(id(j), x, id(t));
        }
    }
    accept_all_but(a, id(n + 1));
    return a;
}

std::string extension_kind_name(ExtensionKind kind) {
    switch (kind) {
        case ExtensionKind::Advance: return "ext1";
        case ExtensionKind::Rewind: return "ext2";
        case ExtensionKind::Climb: return "ext3";
        case ExtensionKind::Return: return "ext4";
    }
    return "ext";
}

ExtensionCase classify_extension(const LinearProfile& p, std::size_t d, const Word& w) {
    const std::size_t n = p.n;
    const std::size_t m = w.size();
    if (d >= n || p.is_accepting(d)) throw InputError("d must be a rejecting state below n");
    if (m <= n || m > 2 * n - 2) throw InputError("extension length must lie in n+1..2n-2");
    check_word(w, p.alphabet);
    {
        std::size_t q = 0;
        for (std::size_t k = 0; k < n; ++k) q = p.step(q, w[k]);
        if (q != n) throw InputError("length-n prefix must be accepted");
    }
    const Letter last = w[m - 1];
    ExtensionCase c;
    c.count = count_letter(w, d + 1, m, last);
    if (c.count <= n - d) {
        c.kind = ExtensionKind::Advance;
        return c;
    }
    if (w[n] != last) {  // σ_{n+1}
        c.kind = ExtensionKind::Rewind;
        return c;
    }
    while (c.x < m && w[m - 1 - c.x] == last) ++c.x;
    c.b = w[d] != last ? 1 : 0;  // σ_{d+1}
    c.u_count = m - c.x >= d + 1 ? count_letter(w, d + 1, m - c.x, last) : 0;
    c.kind = c.u_count + d + c.b < n ? ExtensionKind::Climb : ExtensionKind::Return;
    return c;
}

Dfa factor_extension(const LinearProfile& p, std::size_t d, const Word& w) {
    const std::size_t n = p.n;
    const std::size_t m = w.size();
    const ExtensionCase c = classify_extension(p, d, w);
    const Letter last = w[m - 1];
    Dfa a = blank(p.alphabet, n + 1, extension_kind_name(c.kind));
    auto target = [&](long long t) {
        if (t < 0 || t > static_cast<long long>(n)) throw Error("extension automaton target out of range");
        return static_cast<State>(t);
    };
    const auto N = static_cast<long long>(n);
    const auto M = static_cast<long long>(m);

    switch (c.kind) {
        case ExtensionKind::Advance: {
            // positions d+1..m-1: every occurrence of the last letter plus the first
            // n-d-l other letters, where l counts the last letter before position m
            const std::size_t l = c.count - 1;
            std::vector<std::size_t> idx;
            std::size_t others = 0;
            for (std::size_t k = d + 1; k <= m - 1; ++k) {
                if (w[k - 1] == last)
                    idx.push_back(k);
                else if (others < n - d - l) {
                    idx.push_back(k);
                    ++others;
                }
            }
            if (idx.size() != n - d) throw Error("extension index set has the wrong size");
            copy_base_below(a, p, d);
            for (Letter x = 0; x < p.letters(); ++x) a.set_transition(static_cast<State>(d), x, static_cast<State>(d + 1));
            for (std::size_t j = d + 1; j <= n - 1; ++j) {
                Letter want = w[idx[j - d] - 1];  // σ_{i_{j+1-d}}
                for (Letter x = 0; x < p.letters(); ++x)
                    a.set_transition(static_cast<State>(j), x, static_cast<State>(x == want ? j + 1 : j));
            }
            for (Letter x = 0; x < p.letters(); ++x)
                a.set_transition(static_cast<State>(n), x, static_cast<State>(x == last ? d : n));
            break;
        }
        case ExtensionKind::Rewind: {
            copy_base_below(a, p, n);
            // q_{n-[(m-1)-(n+2)+1]} = q_{2n+2-m}
            const State back = target(2 * N + 2 - M);
            const Letter next = w[n];
            for (Letter x = 0; x < p.letters(); ++x) {
                State t = static_cast<State>(n);
                if (x == next)
                    t = back;
                else if (x == last)
                    t = static_cast<State>(d);
                a.set_transition(static_cast<State>(n), x, t);
            }
            break;
        }
        case ExtensionKind::Climb: {
            copy_base_below(a, p, d);
            for (Letter x = 0; x < p.letters(); ++x) a.set_transition(static_cast<State>(d), x, static_cast<State>(d + 1));
            // the advancing rows run through q_{n-1} so that q_n is reachable
            for (std::size_t j = d + 1; j <= n - 1; ++j)
                for (Letter x = 0; x < p.letters(); ++x)
                    a.set_transition(static_cast<State>(j), x, static_cast<State>(x == last ? j + 1 : j));
            // q_{d-[x-(n-(d+b+(l-x))+1)]} = q_{n-l-b+1}
            const State back =
                target(N - static_cast<long long>(c.count) - static_cast<long long>(c.b) + 1);
            for (Letter x = 0; x < p.letters(); ++x)
                a.set_transition(static_cast<State>(n), x, x == last ? back : static_cast<State>(n));
            break;
        }
        case ExtensionKind::Return: {
            copy_base_below(a, p, n);
            // q_{n-[(m-x-1)-(n+2)+1]} = q_{2n+2-(m-x)}
            const long long mx = M - static_cast<long long>(c.x);
            const State up = target(2 * N + 2 - mx);
            const State down = target(static_cast<long long>(d) - static_cast<long long>(c.x));
            const Letter pivot = w[static_cast<std::size_t>(mx) - 1];
            if (pivot == last) throw Error("extension split does not separate the trailing run");
            for (Letter x = 0; x < p.letters(); ++x) {
                State t = static_cast<State>(n);
                if (x == last)
                    t = up;
                else if (x == pivot)
                    t = down;
                a.set_transition(static_cast<State>(n), x, t);
            }
            break;
        }
    }
    accept_all_but(a, static_cast<State>(d));
    return a;
}

}  // namespace finprime
