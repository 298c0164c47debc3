#include "finprime/algebra.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace finprime {
namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
    if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch("alphabet mismatch between operands");
}

bool combine(ProductMode mode, bool x, bool y) {
    switch (mode) {
        case ProductMode::Intersect: return x && y;
        case ProductMode::Union: return x || y;
        case ProductMode::Difference: return x && !y;
    }
    return false;
}

// Dense pair index when the pair space is small, hash map otherwise.
class PairIndex {
public:
    PairIndex(std::size_t na, std::size_t nb) : nb_(nb) {
        if (na * nb <= (std::size_t{1} << 20)) dense_.assign(na * nb, kNone);
    }
    static constexpr std::uint32_t kNone = ~std::uint32_t{0};

    std::uint32_t get(State p, State q) const {
        std::size_t key = std::size_t{p} * nb_ + q;
        if (!dense_.empty()) return dense_[key];
        auto it = sparse_.find(key);
        return it == sparse_.end() ? kNone : it->second;
    }
    void set(State p, State q, std::uint32_t v) {
        std::size_t key = std::size_t{p} * nb_ + q;
        if (!dense_.empty())
            dense_[key] = v;
        else
            sparse_[key] = v;
    }

private:
    std::size_t nb_;
    std::vector<std::uint32_t> dense_;
    std::unordered_map<std::size_t, std::uint32_t> sparse_;
};

// BFS over the pair graph; returns the word to the first pair (in BFS order)
// satisfying `stop`, which is the lexicographically least among the shortest.
template <class Stop>
std::optional<Word> pair_search(const Dfa& a, const Dfa& b, Stop stop) {
    const std::size_t k = a.letters();
    PairIndex index(a.size(), b.size());
    std::vector<std::pair<State, State>> nodes;
    std::vector<std::pair<std::uint32_t, Letter>> parent;
    nodes.emplace_back(a.initial(), b.initial());
    parent.emplace_back(PairIndex::kNone, 0);
    index.set(a.initial(), b.initial(), 0);
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        auto [p, q] = nodes[head];
        if (stop(p, q)) {
            Word w;
            for (std::uint32_t i = static_cast<std::uint32_t>(head); parent[i].first != PairIndex::kNone;
                 i = parent[i].first)
                w.push_back(parent[i].second);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (Letter x = 0; x < k; ++x) {
            State p2 = a.next(p, x), q2 = b.next(q, x);
            if (index.get(p2, q2) == PairIndex::kNone) {
                index.set(p2, q2, static_cast<std::uint32_t>(nodes.size()));
                nodes.emplace_back(p2, q2);
                parent.emplace_back(static_cast<std::uint32_t>(head), x);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

State run(const Dfa& a, const Word& w) { return run_from(a, a.initial(), w); }

State run_from(const Dfa& a, State q, const Word& w) {
    for (Letter x : w) {
        if (x >= a.letters()) throw InputError("unknown letter index " + std::to_string(x));
        q = a.next(q, x);
    }
    return q;
}

bool accepts(const Dfa& a, const Word& w) { return a.accepting(run(a, w)); }

Dfa product(const Dfa& a, const Dfa& b, ProductMode mode) {
    require_same_alphabet(a, b);
    const std::size_t k = a.letters();
    PairIndex index(a.size(), b.size());
    std::vector<std::pair<State, State>> nodes{{a.initial(), b.initial()}};
    index.set(a.initial(), b.initial(), 0);
    std::vector<State> trans;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        auto [p, q] = nodes[head];
        for (Letter x = 0; x < k; ++x) {
            State p2 = a.next(p, x), q2 = b.next(q, x);
            std::uint32_t id = index.get(p2, q2);
            if (id == PairIndex::kNone) {
                id = static_cast<std::uint32_t>(nodes.size());
                index.set(p2, q2, id);
                nodes.emplace_back(p2, q2);
            }
            trans.push_back(id);
        }
    }
    Dfa out(a.alphabet(), nodes.size(), 0);
    out.set_name(a.name());
    for (State s = 0; s < nodes.size(); ++s) {
        out.set_accepting(s, combine(mode, a.accepting(nodes[s].first), b.accepting(nodes[s].second)));
        for (Letter x = 0; x < k; ++x) out.set_transition(s, x, trans[s * k + x]);
    }
    return out;
}

Dfa complement(const Dfa& a) {
    Dfa out = a;
    for (State q = 0; q < a.size(); ++q) out.set_accepting(q, !a.accepting(q));
    return out;
}

std::vector<State> reachable_states(const Dfa& a) {
    std::vector<char> seen(a.size(), 0);
    std::vector<State> stack{a.initial()};
    seen[a.initial()] = 1;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (Letter x = 0; x < a.letters(); ++x) {
            State t = a.next(q, x);
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
    std::vector<State> out;
    for (State q = 0; q < a.size(); ++q)
        if (seen[q]) out.push_back(q);
    return out;
}

Dfa minimize(const Dfa& a) {
    const std::size_t k = a.letters();
    auto reach = reachable_states(a);
    const std::size_t m = reach.size();
    std::vector<State> compact(a.size(), 0);
    for (std::size_t i = 0; i < m; ++i) compact[reach[i]] = static_cast<State>(i);
    std::vector<State> delta(m * k);
    for (std::size_t i = 0; i < m; ++i)
        for (Letter x = 0; x < k; ++x) delta[i * k + x] = compact[a.next(reach[i], x)];

    // inverse transitions, CSR per letter
    std::vector<std::size_t> inv_start((m + 1) * k, 0);
    std::vector<State> inv(m * k);
    for (std::size_t i = 0; i < m; ++i)
        for (Letter x = 0; x < k; ++x) ++inv_start[x * (m + 1) + delta[i * k + x] + 1];
    for (Letter x = 0; x < k; ++x)
        for (std::size_t t = 0; t < m; ++t) inv_start[x * (m + 1) + t + 1] += inv_start[x * (m + 1) + t];
    {
        std::vector<std::size_t> fill(inv_start);
        for (std::size_t i = 0; i < m; ++i)
            for (Letter x = 0; x < k; ++x) {
                std::size_t slot = x * (m + 1) + delta[i * k + x];
                inv[x * m + fill[slot]++] = static_cast<State>(i);
            }
    }

    std::vector<std::vector<State>> blocks;
    std::vector<std::size_t> block_of(m, 0);
    std::vector<std::size_t> pos(m, 0);  // index of a state inside its block
    {
        std::vector<State> acc, rej;
        for (std::size_t i = 0; i < m; ++i) (a.accepting(reach[i]) ? acc : rej).push_back(static_cast<State>(i));
        if (!acc.empty()) blocks.push_back(std::move(acc));
        if (!rej.empty()) blocks.push_back(std::move(rej));
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (std::size_t j = 0; j < blocks[b].size(); ++j) {
                block_of[blocks[b][j]] = b;
                pos[blocks[b][j]] = j;
            }
    }

    std::vector<std::pair<std::size_t, Letter>> work;
    std::vector<char> in_work;
    auto mark = [&](std::size_t b, Letter x) {
        if (in_work.size() < (b + 1) * k) in_work.resize((b + 1) * k, 0);
        if (!in_work[b * k + x]) {
            in_work[b * k + x] = 1;
            work.emplace_back(b, x);
        }
    };
    if (blocks.size() == 2) {
        std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
        for (Letter x = 0; x < k; ++x) mark(smaller, x);
    }

    std::vector<char> in_x(m, 0);
    std::vector<std::size_t> hits(m, 0);
    std::vector<State> xs;
    std::vector<std::size_t> touched;
    std::vector<std::vector<State>> split;
    while (!work.empty()) {
        auto [b, x] = work.back();
        work.pop_back();
        in_work[b * k + x] = 0;
        xs.clear();
        for (State t : blocks[b]) {
            std::size_t lo = inv_start[x * (m + 1) + t], hi = inv_start[x * (m + 1) + t + 1];
            for (std::size_t j = lo; j < hi; ++j) {
                State s = inv[x * m + j];
                if (!in_x[s]) {
                    in_x[s] = 1;
                    xs.push_back(s);
                }
            }
        }
        touched.clear();
        for (State s : xs) {
            std::size_t y = block_of[s];
            if (hits[y]++ == 0) touched.push_back(y);
            if (split.size() <= y) split.resize(blocks.size());
            split[y].push_back(s);
        }
        for (std::size_t y : touched) {
            if (hits[y] < blocks[y].size()) {
                // move the hit states out of y; cost is proportional to the hits only
                std::vector<State> inside = std::move(split[y]);
                for (State s : inside) {
                    State last = blocks[y].back();
                    blocks[y][pos[s]] = last;
                    pos[last] = pos[s];
                    blocks[y].pop_back();
                }
                std::size_t fresh = blocks.size();
                for (std::size_t j = 0; j < inside.size(); ++j) {
                    block_of[inside[j]] = fresh;
                    pos[inside[j]] = j;
                }
                blocks.push_back(std::move(inside));
                if (hits.size() < blocks.size()) hits.resize(blocks.size(), 0);
                for (Letter c = 0; c < k; ++c) {
                    bool pending = in_work.size() > y * k + c && in_work[y * k + c];
                    if (pending || blocks[fresh].size() <= blocks[y].size())
                        mark(fresh, c);
                    else
                        mark(y, c);
                }
            }
            hits[y] = 0;
            split[y].clear();
        }
        for (State s : xs) in_x[s] = 0;
    }

    // canonical numbering: breadth-first over blocks, letters in alphabet order
    const std::size_t nb = blocks.size();
    std::vector<State> number(nb, PairIndex::kNone);
    std::vector<std::size_t> order;
    order.push_back(block_of[compact[a.initial()]]);
    number[order[0]] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        State rep = blocks[order[head]].front();
        for (Letter x = 0; x < k; ++x) {
            std::size_t t = block_of[delta[rep * k + x]];
            if (number[t] == PairIndex::kNone) {
                number[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }
    }
    Dfa out(a.alphabet(), order.size(), 0);
    out.set_name(a.name());
    for (std::size_t i = 0; i < order.size(); ++i) {
        State rep = blocks[order[i]].front();
        out.set_accepting(static_cast<State>(i), a.accepting(reach[rep]));
        for (Letter x = 0; x < k; ++x)
            out.set_transition(static_cast<State>(i), x, number[block_of[delta[rep * k + x]]]);
    }
    return out;
}

std::size_t index_of(const Dfa& a) { return minimize(a).size(); }

Equivalence equivalent(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b);
    auto w = pair_search(a, b, [&](State p, State q) { return a.accepting(p) != b.accepting(q); });
    return {!w.has_value(), w};
}

bool is_subset(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b);
    const std::size_t k = a.letters();
    const std::size_t nb = b.size();
    thread_local std::vector<char> seen;
    thread_local std::vector<std::uint32_t> stack;
    seen.assign(a.size() * nb, 0);
    stack.clear();
    std::uint32_t start = a.initial() * static_cast<std::uint32_t>(nb) + b.initial();
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
        std::uint32_t cur = stack.back();
        stack.pop_back();
        State p = cur / nb, q = cur % nb;
        if (a.accepting(p) && !b.accepting(q)) return false;
        for (Letter x = 0; x < k; ++x) {
            std::uint32_t nxt = a.next(p, x) * static_cast<std::uint32_t>(nb) + b.next(q, x);
            if (!seen[nxt]) {
                seen[nxt] = 1;
                stack.push_back(nxt);
            }
        }
    }
    return true;
}

Emptiness is_empty(const Dfa& a) {
    std::vector<char> seen(a.size(), 0);
    std::vector<State> nodes{a.initial()};
    std::vector<std::pair<std::uint32_t, Letter>> parent{{PairIndex::kNone, 0}};
    seen[a.initial()] = 1;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        State q = nodes[head];
        if (a.accepting(q)) {
            Word w;
            for (std::uint32_t i = static_cast<std::uint32_t>(head); parent[i].first != PairIndex::kNone;
                 i = parent[i].first)
                w.push_back(parent[i].second);
            std::reverse(w.begin(), w.end());
            return {false, w};
        }
        for (Letter x = 0; x < a.letters(); ++x) {
            State t = a.next(q, x);
            if (!seen[t]) {
                seen[t] = 1;
                nodes.push_back(t);
                parent.emplace_back(static_cast<std::uint32_t>(head), x);
            }
        }
    }
    return {true, std::nullopt};
}

std::vector<char> live_states(const Dfa& a) {
    std::vector<std::vector<State>> preds(a.size());
    for (State q = 0; q < a.size(); ++q)
        for (Letter x = 0; x < a.letters(); ++x) preds[a.next(q, x)].push_back(q);
    std::vector<char> live(a.size(), 0);
    std::vector<State> stack;
    for (State q = 0; q < a.size(); ++q)
        if (a.accepting(q)) {
            live[q] = 1;
            stack.push_back(q);
        }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : preds[q])
            if (!live[p]) {
                live[p] = 1;
                stack.push_back(p);
            }
    }
    return live;
}

namespace {

// Topological order of the useful (reachable and live) states, or nullopt on a cycle.
std::optional<std::vector<State>> useful_topological_order(const Dfa& a, const std::vector<char>& useful) {
    std::vector<std::size_t> indeg(a.size(), 0);
    for (State q = 0; q < a.size(); ++q) {
        if (!useful[q]) continue;
        for (Letter x = 0; x < a.letters(); ++x)
            if (useful[a.next(q, x)]) ++indeg[a.next(q, x)];
    }
    std::vector<State> order;
    std::size_t count = 0;
    for (State q = 0; q < a.size(); ++q)
        if (useful[q]) {
            ++count;
            if (indeg[q] == 0) order.push_back(q);
        }
    for (std::size_t head = 0; head < order.size(); ++head) {
        State q = order[head];
        for (Letter x = 0; x < a.letters(); ++x) {
            State t = a.next(q, x);
            if (useful[t] && --indeg[t] == 0) order.push_back(t);
        }
    }
    if (order.size() != count) return std::nullopt;
    return order;
}

std::vector<char> useful_states(const Dfa& a) {
    auto live = live_states(a);
    std::vector<char> useful(a.size(), 0);
    for (State q : reachable_states(a)) useful[q] = live[q];
    return useful;
}

}  // namespace

bool is_finite_language(const Dfa& a) { return useful_topological_order(a, useful_states(a)).has_value(); }

LongestWord longest_word_length(const Dfa& a) {
    auto useful = useful_states(a);
    if (!useful[a.initial()]) return {};
    auto order = useful_topological_order(a, useful);
    if (!order) return {LongestWord::Kind::Infinite, 0};
    // longest path from each state to an accepting state, in reverse topological order
    std::vector<std::size_t> longest(a.size(), 0);
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        State q = *it;
        std::size_t best = 0;
        for (Letter x = 0; x < a.letters(); ++x) {
            State t = a.next(q, x);
            if (useful[t]) best = std::max(best, longest[t] + 1);
        }
        longest[q] = best;
    }
    return {LongestWord::Kind::Finite, longest[a.initial()]};
}

std::vector<Word> enumerate_language(const Dfa& a, std::size_t max_len) {
    auto live = live_states(a);
    std::vector<Word> out;
    std::vector<std::pair<Word, State>> level;
    if (live[a.initial()]) level.emplace_back(Word{}, a.initial());
    for (std::size_t len = 0; !level.empty(); ++len) {
        for (const auto& [w, q] : level)
            if (a.accepting(q)) out.push_back(w);
        if (len == max_len) break;
        std::vector<std::pair<Word, State>> next;
        for (const auto& [w, q] : level)
            for (Letter x = 0; x < a.letters(); ++x) {
                State t = a.next(q, x);
                if (!live[t]) continue;
                Word w2 = w;
                w2.push_back(x);
                next.emplace_back(std::move(w2), t);
            }
        level = std::move(next);
    }
    return out;
}

Dfa universal_dfa(const Alphabet& alphabet) {
    Dfa a(alphabet, 1, 0);
    a.set_accepting(0);
    a.set_name("universal");
    return a;
}

Dfa empty_dfa(const Alphabet& alphabet) {
    Dfa a(alphabet, 1, 0);
    a.set_name("empty");
    return a;
}

}  // namespace finprime
