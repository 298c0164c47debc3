#include "finprime/primality.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "finprime/algebra.hpp"
#include "finprime/factories.hpp"
#include "finprime/io.hpp"

namespace finprime {
namespace {

std::string word_tag(const Word& w) {
    if (w.empty()) return "eps";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(w[i]);
    }
    return s;
}

LongestWord require_finite(const Dfa& a) {
    auto lw = longest_word_length(a);
    if (lw.kind == LongestWord::Kind::Infinite) throw InputError("the language is infinite");
    return lw;
}

LongestWord require_finite_nonempty(const Dfa& a) {
    auto lw = require_finite(a);
    if (lw.kind == LongestWord::Kind::None) throw InputError("the language is empty");
    return lw;
}

// Accepted words of length <= max_len, counted with saturation at cap+1.
std::size_t count_accepted(const Dfa& a, std::size_t max_len, std::size_t cap) {
    std::vector<std::size_t> ways(a.size(), 0), next(a.size(), 0);
    ways[a.initial()] = 1;
    std::size_t total = 0;
    for (std::size_t len = 0;; ++len) {
        for (State q = 0; q < a.size(); ++q)
            if (a.accepting(q)) total = std::min(cap + 1, total + ways[q]);
        if (len == max_len || total > cap) break;
        std::fill(next.begin(), next.end(), 0);
        for (State q = 0; q < a.size(); ++q)
            if (ways[q])
                for (Letter x = 0; x < a.letters(); ++x) {
                    State t = a.next(q, x);
                    next[t] = std::min(cap + 1, next[t] + ways[q]);
                }
        std::swap(ways, next);
    }
    return total;
}

// Calls f on every word of length exactly len, in lexicographic order.
template <class F>
void for_each_word(std::size_t letters, std::size_t len, F f) {
    Word w(len, 0);
    while (true) {
        f(w);
        std::size_t k = len;
        while (k > 0 && w[k - 1] + 1 == letters) w[--k] = 0;
        if (k == 0) return;
        ++w[k - 1];
    }
}

std::size_t saturating_pow_sum(std::size_t base, std::size_t from, std::size_t to, std::size_t cap) {
    std::size_t total = 0, power = 1;
    for (std::size_t k = 0; k <= to; ++k) {
        if (k >= from) total = std::min(cap + 1, total + power);
        power = std::min(cap + 1, power * base);
    }
    return total;
}

class FactorSink {
public:
    FactorSink(const DecompositionLimits& limits) : limits_(limits) {}

    void add(std::string family, std::string params, Dfa dfa) {
        dfa.set_name("_");
        std::string key = serialize_dfa(dfa);
        if (!seen_.insert(std::move(key)).second) return;
        if (factors_.size() >= limits_.max_factors)
            throw ResourceLimit("decomposition exceeds " + std::to_string(limits_.max_factors) + " factors");
        dfa.set_name(family + "_" + params);
        factors_.push_back({std::move(family), std::move(params), std::move(dfa)});
    }
    std::vector<Factor> take() { return std::move(factors_); }

private:
    const DecompositionLimits& limits_;
    std::set<std::string> seen_;
    std::vector<Factor> factors_;
};

Verdict make(Status s, std::string branch) { return {s, std::move(branch), std::nullopt, {}}; }

Word safety_witness(const LinearProfile& p, const Word& breaching) {
    const std::size_t n = p.n;
    for (Letter x = 0; x < p.letters(); ++x) {
        if (!p.in_sigma(n - 1, n, x)) continue;
        bool to_sink = false;
        for (std::size_t j = 0; j < n && !to_sink; ++j) to_sink = p.in_sigma(j, n + 1, x);
        if (!to_sink) {
            Word w = breaching;
            w.push_back(x);
            return w;
        }
    }
    throw Error("no letter of the last step avoids every sink transition");
}

}  // namespace

std::string status_name(Status s) { return s == Status::Prime ? "Prime" : "Composite"; }

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::Intersection: return "cap";
        case Mode::Union: return "cup";
        case Mode::Dnf: return "dnf";
    }
    return "";
}

std::string Factor::file_name() const { return "factor_" + family + "_" + params + ".dfa"; }

std::size_t Decomposition::factor_count() const {
    std::size_t c = 0;
    for (const auto& t : terms) c += t.size();
    return c;
}

std::vector<const Factor*> Decomposition::factors() const {
    std::vector<const Factor*> out;
    for (const auto& t : terms)
        for (const auto& f : t) out.push_back(&f);
    return out;
}

std::size_t lcm_up_to(std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 2; i <= k; ++i) {
        r = std::lcm(r, i);
        if (r > (std::size_t{1} << 40)) throw ResourceLimit("witness exponent too large");
    }
    return r;
}

Verdict decide_intersection_primality(const Dfa& a, const DecompositionLimits& limits) {
    auto lw = require_finite(a);
    if (lw.kind == LongestWord::Kind::None) return make(Status::Prime, "empty-language");
    auto p = linear_profile(a);
    if (!p) return make(Status::Composite, "non-linear");
    Verdict v;
    if (uniform_max_word_letter(*p)) {
        v = make(Status::Prime, "linear+σⁿ");
    } else {
        if (interior_rejecting_state(*p)) return make(Status::Composite, "non-safety");
        if (has_cep(*p).has_cep) return make(Status::Composite, "CEP");
        v = make(Status::Prime, "safety+noCEP");
    }
    try {
        v.witness = intersection_witness(a, limits);
    } catch (const ResourceLimit& e) {
        v.notes = std::string("witness omitted: ") + e.what();
    }
    return v;
}

Word intersection_witness(const Dfa& a, const DecompositionLimits& limits) {
    require_finite_nonempty(a);
    auto p = linear_profile(a);
    if (!p) throw InputError("no witness: the automaton is composite");
    if (auto s = uniform_max_word_letter(*p)) {
        std::size_t len = p->n + lcm_up_to(p->n + 1);
        if (len > limits.max_witness_length)
            throw ResourceLimit("witness length " + std::to_string(len) + " exceeds the cap");
        return Word(len, *s);
    }
    if (interior_rejecting_state(*p)) throw InputError("no witness: the automaton is composite");
    auto cep = has_cep(*p);
    if (cep.has_cep) throw InputError("no witness: the automaton is composite");
    return safety_witness(*p, *cep.breaching);
}

std::vector<Word> extension_candidates(const LinearProfile& p, const DecompositionLimits& limits) {
    const std::size_t n = p.n;
    std::vector<Word> out;
    if (n < 3) return out;
    std::vector<Word> heads;
    for (const Word& w : enumerate_language(p.base, n))
        if (w.size() == n) heads.push_back(w);
    std::size_t tails = saturating_pow_sum(p.letters(), 1, n - 2, limits.max_candidates);
    if (tails > limits.max_candidates || heads.size() * tails > limits.max_candidates)
        throw ResourceLimit("more than " + std::to_string(limits.max_candidates) + " extension candidates");

    std::vector<Dfa> position_factors;
    for (Letter x = 0; x < p.letters(); ++x)
        if (auto i = last_gap_position(p, x)) position_factors.push_back(factor_letter_position(p, x, *i));

    // reach[q * (n+1) + c]: some subsequence of length c drives the base automaton to q
    const std::size_t width = n + 1;
    auto subsequences_in_language = [&](const Word& w) {
        std::vector<char> reach((n + 2) * width, 0), next;
        reach[0] = 1;
        for (Letter x : w) {
            next = reach;
            for (std::size_t q = 0; q < n + 2; ++q)
                for (std::size_t c = 0; c < n; ++c)
                    if (reach[q * width + c]) next[p.step(q, x) * width + c + 1] = 1;
            reach.swap(next);
        }
        for (std::size_t q = 0; q < n + 2; ++q)
            if (reach[q * width + n] && !p.is_accepting(q)) return false;
        return true;
    };

    for (const Word& head : heads)
        for (std::size_t extra = 1; extra + 2 <= n; ++extra)
            for_each_word(p.letters(), extra, [&](const Word& tail) {
                Word w = head;
                w.insert(w.end(), tail.begin(), tail.end());
                if (!subsequences_in_language(w)) return;
                for (const Dfa& f : position_factors)
                    if (!accepts(f, w)) return;
                out.push_back(std::move(w));
            });
    std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

Decomposition intersection_decomposition(const Dfa& a, const DecompositionLimits& limits) {
    Verdict v = decide_intersection_primality(a, limits);
    if (v.prime()) throw InputError("no decomposition: the automaton is prime");
    const Alphabet& alphabet = a.alphabet();
    FactorSink sink(limits);
    Decomposition d;
    d.mode = Mode::Intersection;
    d.bound = index_of(a) - 1;

    if (v.branch == "non-linear") {
        const std::size_t n = longest_word_length(a).length;
        if (saturating_pow_sum(alphabet.size(), 0, n, limits.max_factors) > limits.max_factors)
            throw ResourceLimit("decomposition exceeds " + std::to_string(limits.max_factors) + " factors");
        sink.add("cap", std::to_string(n), length_cap_dfa(n, alphabet));
        for (std::size_t len = 0; len <= n; ++len)
            for_each_word(alphabet.size(), len, [&](const Word& w) {
                if (!accepts(a, w)) sink.add("cosingleton", word_tag(w), complement(singleton_dfa(w, alphabet)));
            });
        d.terms.push_back(sink.take());
        return d;
    }

    const LinearProfile p = *linear_profile(a);
    const std::size_t n = p.n;
    auto chains = [&] {
        for (const auto& c : index_chains(n)) {
            std::string tag;
            for (std::size_t k = 0; k < c.size(); ++k) tag += (k ? "-" : "") + std::to_string(c[k]);
            sink.add("chain", tag, factor_chain(p, c));
        }
    };
    sink.add("loop0", "n" + std::to_string(n), factor_loop_zero(p));

    if (v.branch == "CEP") {
        chains();
        for (std::size_t i = 0; i + 2 <= n; ++i)
            for (std::size_t l = 2; l <= n - i; ++l)
                sink.add("skip", "i" + std::to_string(i) + "-l" + std::to_string(l), factor_skip(p, i, l));
        d.terms.push_back(sink.take());
        return d;
    }

    // non-safety
    const std::size_t dd = *interior_rejecting_state(p);
    sink.add("loopd", "d" + std::to_string(dd), factor_loop_d(p, dd));
    chains();
    for (Letter x = 0; x < p.letters(); ++x) {
        auto i = last_gap_position(p, x);
        if (!i) throw Error("a letter without a gap position in a profile with no uniform word");
        sink.add("letterpos", "s" + std::to_string(x) + "-i" + std::to_string(*i), factor_letter_position(p, x, *i));
    }
    if (saturating_pow_sum(alphabet.size(), n, n, limits.max_factors) > limits.max_factors)
        throw ResourceLimit("decomposition exceeds " + std::to_string(limits.max_factors) + " factors");
    for_each_word(alphabet.size(), n, [&](const Word& w) {
        if (!accepts(p.base, w)) sink.add("subseq", word_tag(w), subsequence_excluder(w, alphabet));
    });
    for (const Word& w : extension_candidates(p, limits)) {
        Dfa f = factor_extension(p, dd, w);
        if (accepts(f, w)) throw Error("extension factor accepts its own word");
        std::string family = f.name();
        sink.add(family, word_tag(w), std::move(f));
    }
    d.terms.push_back(sink.take());
    return d;
}

Verdict decide_union_primality(const Dfa& a) {
    require_finite_nonempty(a);
    return linear_profile(a) ? make(Status::Prime, "linear") : make(Status::Composite, "non-linear");
}

Decomposition union_decomposition(const Dfa& a, const DecompositionLimits& limits) {
    auto lw = require_finite_nonempty(a);
    if (linear_profile(a)) throw InputError("no decomposition: the automaton is union-prime");
    if (count_accepted(a, lw.length, limits.max_factors) > limits.max_factors)
        throw ResourceLimit("decomposition exceeds " + std::to_string(limits.max_factors) + " factors");
    Decomposition d;
    d.mode = Mode::Union;
    d.bound = index_of(a) - 1;
    for (const Word& w : enumerate_language(a, lw.length)) {
        Dfa f = singleton_dfa(w, a.alphabet());
        f.set_name("singleton_" + word_tag(w));
        d.terms.push_back({Factor{"singleton", word_tag(w), std::move(f)}});
    }
    return d;
}

Verdict decide_dnf_primality(const Dfa& a) {
    require_finite_nonempty(a);
    auto p = linear_profile(a);
    if (!p) return make(Status::Composite, "non-linear");
    if (!uniform_max_word_letter(*p)) return make(Status::Composite, "no-σⁿ");
    return make(Status::Prime, "linear+σⁿ");
}

Decomposition dnf_decomposition(const Dfa& a, const DecompositionLimits& limits) {
    Verdict v = decide_dnf_primality(a);
    if (v.prime()) throw InputError("no decomposition: the automaton is DNF-prime");
    if (v.branch == "non-linear") {
        Decomposition d = union_decomposition(a, limits);
        d.mode = Mode::Dnf;
        return d;
    }
    const std::size_t n = longest_word_length(a).length;
    if (count_accepted(a, n, limits.max_factors) * 2 > limits.max_factors)
        throw ResourceLimit("decomposition exceeds " + std::to_string(limits.max_factors) + " factors");
    Decomposition d;
    d.mode = Mode::Dnf;
    d.bound = index_of(a) - 1;
    for (const Word& w : enumerate_language(a, n)) {
        if (w.size() < n) {
            Dfa f = singleton_dfa(w, a.alphabet());
            f.set_name("singleton_" + word_tag(w));
            d.terms.push_back({Factor{"singleton", word_tag(w), std::move(f)}});
            continue;
        }
        const Letter first = w.front();
        const auto k = static_cast<std::size_t>(std::count(w.begin(), w.end(), first));
        Dfa star = star_word_dfa(w, a.alphabet());
        star.set_name("star_" + word_tag(w));
        Dfa count = letter_count_dfa(first, k, a.alphabet());
        std::string tag = "s" + std::to_string(first) + "-k" + std::to_string(k) + "-" + word_tag(w);
        count.set_name("count_" + tag);
        d.terms.push_back({Factor{"star", word_tag(w), std::move(star)}, Factor{"count", tag, std::move(count)}});
    }
    return d;
}

Verdict decide_s_primality(const Dfa& a) {
    const bool finite = is_finite_language(a);
    if (!finite && !is_simple_cosafety(a))
        throw InputError("S-primality is decided only for finite languages and simple co-safety automata");
    if (a.size() > index_of(a)) return make(Status::Composite, "non-minimal");
    if (finite) return decide_intersection_primality(a);
    return make(Status::Prime, "simple-cosafety");
}

}  // namespace finprime
