#include "finprime/classifier.hpp"

#include <algorithm>

#include "finprime/algebra.hpp"

namespace finprime {

std::vector<Letter> LinearProfile::sigma(std::size_t i, std::size_t j) const {
    std::vector<Letter> out;
    for (Letter a = 0; a < letters(); ++a)
        if (step(i, a) == j) out.push_back(a);
    return out;
}

std::optional<LinearProfile> linear_profile(const Dfa& a) {
    auto longest = longest_word_length(a);
    if (longest.kind == LongestWord::Kind::None) throw InputError("linear profile of the empty language");
    if (longest.kind == LongestWord::Kind::Infinite) throw InputError("linear profile of an infinite language");
    Dfa m = minimize(a);
    const std::size_t n = longest.length;
    if (m.size() != n + 2) return std::nullopt;

    // depth = longest path from the initial state; in a linear ADFA it is a bijection onto 0..n
    auto live = live_states(m);
    std::vector<std::size_t> depth(m.size(), 0);
    std::vector<std::size_t> indeg(m.size(), 0);
    for (State q = 0; q < m.size(); ++q)
        if (live[q])
            for (Letter x = 0; x < m.letters(); ++x)
                if (live[m.next(q, x)]) ++indeg[m.next(q, x)];
    std::vector<State> order;
    for (State q = 0; q < m.size(); ++q)
        if (live[q] && indeg[q] == 0) order.push_back(q);
    for (std::size_t h = 0; h < order.size(); ++h)
        for (Letter x = 0; x < m.letters(); ++x) {
            State t = m.next(order[h], x);
            if (!live[t]) continue;
            depth[t] = std::max(depth[t], depth[order[h]] + 1);
            if (--indeg[t] == 0) order.push_back(t);
        }

    std::vector<State> label(m.size(), static_cast<State>(n + 1));
    std::vector<char> used(n + 2, 0);
    for (State q = 0; q < m.size(); ++q) {
        if (!live[q]) continue;
        if (depth[q] > n || used[depth[q]]) return std::nullopt;
        used[depth[q]] = 1;
        label[q] = static_cast<State>(depth[q]);
    }

    LinearProfile p;
    p.n = n;
    p.alphabet = a.alphabet();
    p.next.assign((n + 2) * a.letters(), 0);
    p.accepting.assign(n + 2, 0);
    Dfa base(a.alphabet(), n + 2, 0);
    base.set_name(a.name());
    for (State q = 0; q < m.size(); ++q) {
        State i = label[q];
        p.accepting[i] = m.accepting(q);
        base.set_accepting(i, m.accepting(q));
        for (Letter x = 0; x < a.letters(); ++x) {
            p.next[i * a.letters() + x] = label[m.next(q, x)];
            base.set_transition(i, x, label[m.next(q, x)]);
        }
    }
    p.base = std::move(base);
    return p;
}

namespace {

bool sink_property(const Dfa& m, bool accepting_side) {
    for (State q = 0; q < m.size(); ++q) {
        if (m.accepting(q) != accepting_side) continue;
        for (Letter x = 0; x < m.letters(); ++x)
            if (m.next(q, x) != q) return false;
    }
    return true;
}

}  // namespace

bool is_safety(const Dfa& a) { return sink_property(minimize(a), false); }

bool is_cosafety(const Dfa& a) { return sink_property(minimize(a), true); }

bool is_simple_cosafety(const Dfa& a) {
    Dfa m = minimize(a);
    if (!sink_property(m, true)) return false;
    std::vector<State> rest;
    std::size_t sinks = 0;
    for (State q = 0; q < m.size(); ++q) {
        if (m.accepting(q))
            ++sinks;
        else
            rest.push_back(q);
    }
    if (sinks != 1) return false;
    if (rest.empty()) return true;
    // one strongly connected component: everything reaches rest[0] and rest[0] reaches everything
    auto closure = [&](bool forward) {
        std::vector<char> seen(m.size(), 0);
        std::vector<State> stack{rest[0]};
        seen[rest[0]] = 1;
        while (!stack.empty()) {
            State q = stack.back();
            stack.pop_back();
            for (State p : rest) {
                if (seen[p]) continue;
                bool edge = false;
                for (Letter x = 0; x < m.letters() && !edge; ++x)
                    edge = forward ? m.next(q, x) == p : m.next(p, x) == q;
                if (edge) {
                    seen[p] = 1;
                    stack.push_back(p);
                }
            }
        }
        return std::all_of(rest.begin(), rest.end(), [&](State q) { return seen[q] != 0; });
    };
    return closure(true) && closure(false);
}

std::optional<Letter> uniform_max_word_letter(const LinearProfile& p) {
    for (Letter a = 0; a < p.letters(); ++a) {
        std::size_t q = 0;
        for (std::size_t i = 0; i < p.n; ++i) q = p.step(q, a);
        if (p.is_accepting(q)) return a;
    }
    return std::nullopt;
}

std::optional<std::size_t> last_gap_position(const LinearProfile& p, Letter a) {
    for (std::size_t i = p.n; i >= 1; --i)
        if (!p.in_sigma(i - 1, i, a)) return i;
    return std::nullopt;
}

CepResult has_cep(const LinearProfile& p) {
    if (p.n == 0) throw InputError("the CEP is undefined for n = 0");
    auto first = p.sigma(0, 1);
    Word w{first.front()};
    if (p.n == 1) return {false, w};
    for (std::size_t x = 2; x <= p.n; ++x) {
        std::optional<Letter> pick;
        for (Letter a : p.sigma(x - 1, x)) {
            bool ok = true;
            for (std::size_t i = 0; i + 2 <= x && ok; ++i) {
                std::size_t j = p.step(i, a);
                ok = i < j && j < x;
            }
            if (ok) {
                pick = a;
                break;
            }
        }
        if (!pick) return {true, std::nullopt};
        w.push_back(*pick);
    }
    return {false, w};
}

std::optional<std::size_t> interior_rejecting_state(const LinearProfile& p) {
    for (std::size_t d = 0; d < p.n; ++d)
        if (!p.is_accepting(d)) return d;
    return std::nullopt;
}

}  // namespace finprime
