#include "finprime/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <mutex>
#include <unordered_set>

#include "finprime/algebra.hpp"

namespace finprime {
namespace {

std::size_t sat_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
    return a * b;
}

std::string language_key(const Dfa& m) {
    std::string key;
    key.reserve(m.size() * (m.letters() + 1));
    for (State q = 0; q < m.size(); ++q) {
        key.push_back(m.accepting(q) ? 'A' : 'R');
        for (Letter x = 0; x < m.letters(); ++x) key.push_back(static_cast<char>(m.next(q, x)));
    }
    return key;
}

bool all_reachable(const Dfa& a) { return reachable_states(a).size() == a.size(); }

Dfa intersect_all(const Alphabet& alphabet, const std::vector<const Dfa*>& parts) {
    Dfa acc = universal_dfa(alphabet);
    for (const Dfa* f : parts) acc = minimize(product(acc, *f, ProductMode::Intersect));
    return acc;
}

// Number of accepted words of length <= len, as a double to stay clear of overflow.
double short_word_count(const Dfa& a, std::size_t len) {
    std::vector<double> cur(a.size(), 0.0), nxt(a.size());
    cur[a.initial()] = 1.0;
    double total = 0.0;
    for (std::size_t step = 0;; ++step) {
        for (State q = 0; q < a.size(); ++q)
            if (a.accepting(q)) total += cur[q];
        if (step == len) return total;
        std::fill(nxt.begin(), nxt.end(), 0.0);
        for (State q = 0; q < a.size(); ++q)
            if (cur[q] != 0.0)
                for (Letter x = 0; x < a.letters(); ++x) nxt[a.next(q, x)] += cur[q];
        cur.swap(nxt);
    }
}

}  // namespace

std::size_t dfa_count(std::size_t k, std::size_t letters) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k * letters; ++i) total = sat_mul(total, k);
    for (std::size_t i = 0; i < k; ++i) total = sat_mul(total, 2);
    return total;
}

void enumerate_dfas(std::size_t k, const Alphabet& alphabet, const std::function<void(const Dfa&)>& visit,
                    const OracleLimits& limits) {
    if (k == 0) throw InputError("a DFA needs at least one state");
    if (dfa_count(k, alphabet.size()) > limits.max_enumerated_dfas)
        throw ResourceLimit("enumerating " + std::to_string(k) + "-state DFAs exceeds the enumeration cap");
    const std::size_t cells = k * alphabet.size();
    std::vector<State> table(cells, 0);
    Dfa a(alphabet, k, 0);
    while (true) {
        for (std::size_t c = 0; c < cells; ++c)
            a.set_transition(static_cast<State>(c / alphabet.size()), static_cast<Letter>(c % alphabet.size()), table[c]);
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            for (State q = 0; q < k; ++q) a.set_accepting(q, (mask >> q) & 1);
            visit(a);
        }
        std::size_t c = cells;
        while (c > 0 && table[c - 1] + 1 == k) table[--c] = 0;
        if (c == 0) return;
        ++table[c - 1];
    }
}

const std::vector<Dfa>& factor_pool(std::size_t k, const Alphabet& alphabet, const OracleLimits& limits) {
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, std::vector<std::string>>, std::vector<Dfa>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(k, alphabet.symbols());
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::size_t total = 0;
    for (std::size_t s = 1; s <= k; ++s) total = std::min(std::numeric_limits<std::size_t>::max() - 1, total + dfa_count(s, alphabet.size()));
    if (total > limits.max_enumerated_dfas)
        throw ResourceLimit("factor pool of " + std::to_string(k) + "-state DFAs exceeds the enumeration cap");

    std::vector<Dfa> pool;
    std::unordered_set<std::string> seen;
    for (std::size_t s = 1; s <= k; ++s)
        enumerate_dfas(s, alphabet, [&](const Dfa& a) {
            // automata with unreachable states repeat languages of smaller sizes
            if (s > 1 && !all_reachable(a)) return;
            Dfa m = minimize(a);
            if (seen.insert(language_key(m)).second) pool.push_back(std::move(m));
        }, limits);
    return cache.emplace(key, std::move(pool)).first->second;
}

namespace {

Dfa checked_target(const Dfa& a, const OracleLimits& limits) {
    Dfa target = minimize(a);
    const std::size_t ind = target.size();
    if (ind > 1 && ind - 1 > limits.max_factor_states)
        throw ResourceLimit("index " + std::to_string(ind) + " needs factors beyond the configured state bound");
    return target;
}

// The members of α(target), in pool order.
std::vector<const Dfa*> alpha_members(const Dfa& target, const OracleLimits& limits) {
    std::vector<const Dfa*> out;
    if (target.size() == 1) return out;
    for (const Dfa& b : factor_pool(target.size() - 1, target.alphabet(), limits))
        if (is_subset(target, b)) out.push_back(&b);
    return out;
}

}  // namespace

Dfa alpha_intersection(const Dfa& a, const OracleLimits& limits) {
    const Dfa target = checked_target(a, limits);
    Dfa acc = universal_dfa(a.alphabet());
    for (const Dfa* b : alpha_members(target, limits)) {
        if (is_subset(acc, *b)) continue;
        acc = minimize(product(acc, *b, ProductMode::Intersect));
        if (acc.size() > limits.max_accumulator_states) throw ResourceLimit("accumulator exceeds the state cap");
        if (acc == target) break;
    }
    return acc;
}

// Decides L = ∩α(A) without building the whole intersection. The accumulator only takes members
// that reject its current shortest extra word, so it stays close to L. A word no member rejects
// lies in ∩α(A) \ L, and since ∩α(A) ⊆ acc it is also the shortest such word.
Verdict oracle_primality(const Dfa& a, const OracleLimits& limits) {
    const Dfa target = checked_target(a, limits);
    const auto members = alpha_members(target, limits);
    const std::size_t horizon = 2 * target.size() + 2;
    std::vector<double> weight(members.size(), -1.0);

    Verdict v;
    v.branch = "oracle";
    Dfa acc = universal_dfa(a.alphabet());
    while (true) {
        auto extra = is_empty(product(acc, target, ProductMode::Difference));
        if (extra.empty) {
            v.status = Status::Composite;
            return v;
        }
        const Word& w = *extra.witness;
        // among the most restrictive members rejecting w, take the one giving the smallest product
        std::vector<std::size_t> rejecting;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (accepts(*members[i], w)) continue;
            if (weight[i] < 0) weight[i] = short_word_count(*members[i], horizon);
            rejecting.push_back(i);
        }
        if (rejecting.empty()) {
            v.status = Status::Prime;
            v.witness = w;
            return v;
        }
        constexpr std::size_t kTried = 16;
        const std::size_t tried = std::min(kTried, rejecting.size());
        std::partial_sort(rejecting.begin(), rejecting.begin() + static_cast<std::ptrdiff_t>(tried), rejecting.end(),
                          [&](std::size_t x, std::size_t y) { return weight[x] < weight[y]; });
        std::optional<Dfa> next;
        for (std::size_t k = 0; k < tried; ++k) {
            Dfa cand = minimize(product(acc, *members[rejecting[k]], ProductMode::Intersect));
            if (!next || cand.size() < next->size()) next = std::move(cand);
        }
        acc = std::move(*next);
        if (acc.size() > limits.max_accumulator_states) throw ResourceLimit("accumulator exceeds the state cap");
    }
}

bool oracle_cep(const LinearProfile& p, std::size_t max_words) {
    const std::size_t n = p.n;
    if (n == 0) throw InputError("the CEP is undefined for n = 0");
    const Dfa& base = p.base;
    // dead[q]: no nonempty word leads from q to an accepting state
    std::vector<char> dead(base.size(), 1);
    {
        auto live = live_states(base);
        for (State q = 0; q < base.size(); ++q)
            for (Letter x = 0; x < base.letters(); ++x)
                if (live[base.next(q, x)]) dead[q] = 0;
    }
    std::vector<Word> top;
    for (const Word& w : enumerate_language(base, n)) {
        if (w.size() != n) continue;
        top.push_back(w);
        if (top.size() > max_words) throw ResourceLimit("too many maximal-length words for the CEP oracle");
    }
    for (const Word& w : top) {
        bool found = false;
        for (std::size_t i = 0; i + 2 <= n && !found; ++i)
            for (std::size_t l = 2; l <= n - i && !found; ++l) {
                Word c(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                c.insert(c.end(), w.begin() + static_cast<std::ptrdiff_t>(i + l - 1), w.end());
                found = dead[run(base, c)] != 0;
            }
        if (!found) return false;
    }
    return true;
}

VerifyResult verify_decomposition(const Dfa& a, const Decomposition& d, const OracleLimits& limits) {
    const std::size_t ind = index_of(a);
    if (d.bound >= ind)
        return {false, "bound " + std::to_string(d.bound) + " is not below the index " + std::to_string(ind), {}};
    for (const Factor* f : d.factors()) {
        if (!(f->dfa.alphabet() == a.alphabet())) return {false, "factor " + f->file_name() + " has another alphabet", {}};
        if (f->dfa.size() > d.bound)
            return {false, "factor " + f->file_name() + " has " + std::to_string(f->dfa.size()) + " states", {}};
    }
    if (d.terms.empty() && d.mode == Mode::Intersection) return {false, "empty intersection", {}};

    Dfa combined = empty_dfa(a.alphabet());
    if (d.mode == Mode::Intersection) {
        std::vector<const Dfa*> parts;
        for (const Factor* f : d.factors()) parts.push_back(&f->dfa);
        combined = intersect_all(a.alphabet(), parts);
    } else {
        for (const auto& term : d.terms) {
            std::vector<const Dfa*> parts;
            for (const Factor& f : term) parts.push_back(&f.dfa);
            combined = minimize(product(combined, intersect_all(a.alphabet(), parts), ProductMode::Union));
        }
    }
    auto eq = equivalent(combined, a);
    if (!eq.equivalent) return {false, "combined language differs from the input", eq.witness};

    // independent membership check on short words, factor by factor
    const std::size_t horizon = limits.max_check_length ? limits.max_check_length : 2 * ind;
    std::size_t budget = 200000;
    std::vector<Word> level{Word{}};
    for (std::size_t len = 0; len <= horizon && !level.empty(); ++len) {
        for (const Word& w : level) {
            bool in = d.mode == Mode::Intersection;
            for (const auto& term : d.terms) {
                bool all = true;
                for (const Factor& f : term) all = all && accepts(f.dfa, w);
                if (d.mode == Mode::Intersection)
                    in = in && all;
                else
                    in = in || all;
            }
            if (in != accepts(a, w)) return {false, "word-level membership differs", w};
        }
        if (len == horizon) break;
        std::vector<Word> next;
        for (const Word& w : level)
            for (Letter x = 0; x < a.letters() && budget > 0; ++x, --budget) {
                Word v = w;
                v.push_back(x);
                next.push_back(std::move(v));
            }
        level = std::move(next);
    }
    return {true, "ok", std::nullopt};
}

bool verify_witness(const Dfa& a, const Word& w, const OracleLimits& limits) {
    if (accepts(a, w)) return false;
    const Dfa target = checked_target(a, limits);
    for (const Dfa* b : alpha_members(target, limits))
        if (!accepts(*b, w)) return false;
    return true;
}

std::vector<Dfa> enumerate_minimal_adfas(std::size_t max_index, const Alphabet& alphabet) {
    std::vector<Dfa> out;
    std::unordered_set<std::string> seen;
    const std::size_t letters = alphabet.size();
    for (std::size_t k = 2; k <= max_index; ++k) {
        const std::size_t sink = k - 1;
        // choice[q * letters + x] picks a target among q+1..k-1 (the last one is the sink)
        std::vector<std::size_t> choice(sink * letters, 0);
        Dfa a(alphabet, k, 0);
        for (Letter x = 0; x < letters; ++x) a.set_transition(static_cast<State>(sink), x, static_cast<State>(sink));
        while (true) {
            for (std::size_t q = 0; q < sink; ++q)
                for (Letter x = 0; x < letters; ++x)
                    a.set_transition(static_cast<State>(q), x, static_cast<State>(q + 1 + choice[q * letters + x]));
            for (std::size_t mask = 1; mask < (std::size_t{1} << sink); ++mask) {
                for (State q = 0; q < sink; ++q) a.set_accepting(q, (mask >> q) & 1);
                Dfa m = minimize(a);
                if (m.size() > max_index || is_empty(m).empty || !seen.insert(language_key(m)).second) continue;
                out.push_back(std::move(m));
            }
            std::size_t c = choice.size();
            while (c > 0 && choice[c - 1] + 1 == k - 1 - (c - 1) / letters) choice[--c] = 0;
            if (c == 0) break;
            ++choice[c - 1];
        }
    }
    return out;
}

}  // namespace finprime
