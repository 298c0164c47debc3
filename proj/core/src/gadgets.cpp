#include "finprime/gadgets.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

#include "finprime/algebra.hpp"

namespace finprime {
namespace {

std::size_t number(const std::string& tok, std::size_t line) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(line, "expected a number, got '" + tok + "'");
    return v;
}

const Alphabet& binary() {
    static const Alphabet a{"0", "1"};
    return a;
}

// Transition targets of the graph automaton: letter 0 follows the first listed out-edge, letter 1
// the second, and a missing edge loops.
std::vector<std::size_t> graph_moves(const Digraph& g, const std::vector<std::size_t>& relabel) {
    std::vector<std::size_t> moves(g.nodes * 2);
    std::vector<std::size_t> used(g.nodes, 0);
    for (std::size_t v = 0; v < g.nodes; ++v) moves[relabel[v] * 2] = moves[relabel[v] * 2 + 1] = relabel[v];
    for (const auto& [u, v] : g.edges) moves[relabel[u] * 2 + used[u]++] = relabel[v];
    return moves;
}

struct Layout {
    std::size_t n;
    State base(std::size_t i) const { return static_cast<State>(i == 0 ? 0 : 8 + 7 * (i - 1)); }
    State p(std::size_t i) const { return base(i); }
    State q(std::size_t i) const { return base(i) + 1; }
    State q0_prime() const { return 2; }
    State node(std::size_t i) const { return base(i) + (i == 0 ? 3 : 2); }
    State wait(std::size_t i, std::size_t j) const { return node(i) + 1 + static_cast<State>(j); }
    State branch(std::size_t i, std::size_t j) const { return node(i) + 3 + static_cast<State>(j); }
    std::size_t size() const { return 7 * n + 1; }
};

}  // namespace

Digraph parse_digraph(std::string_view text) {
    Digraph g;
    bool have_name = false, have_nodes = false, ended = false;
    std::optional<std::size_t> s, t;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string x; ls >> x;) tok.push_back(x);
        if (tok.empty()) continue;
        if (ended) throw ParseError(lineno, "content after 'end'");
        const std::string& key = tok[0];
        if (!have_name) {
            if (key != "digraph" || tok.size() != 2) throw ParseError(lineno, "expected 'digraph <name>'");
            g.name = tok[1];
            have_name = true;
        } else if (key == "nodes") {
            if (have_nodes) throw ParseError(lineno, "duplicate 'nodes' line");
            if (tok.size() != 2) throw ParseError(lineno, "expected 'nodes <n>'");
            g.nodes = number(tok[1], lineno);
            if (g.nodes == 0) throw ParseError(lineno, "a graph needs at least one node");
            have_nodes = true;
        } else if (key == "edge") {
            if (!have_nodes) throw ParseError(lineno, "'edge' before 'nodes'");
            if (tok.size() != 3) throw ParseError(lineno, "expected 'edge <u> <v>'");
            std::size_t u = number(tok[1], lineno), v = number(tok[2], lineno);
            if (u >= g.nodes || v >= g.nodes) throw ParseError(lineno, "edge endpoint out of range");
            g.edges.emplace_back(u, v);
        } else if (key == "s" || key == "t") {
            if (!have_nodes) throw ParseError(lineno, "'" + key + "' before 'nodes'");
            if (tok.size() != 2) throw ParseError(lineno, "expected '" + key + " <id>'");
            auto& slot = key == "s" ? s : t;
            if (slot) throw ParseError(lineno, "duplicate '" + key + "' line");
            slot = number(tok[1], lineno);
            if (*slot >= g.nodes) throw ParseError(lineno, key + " out of range");
        } else if (key == "end") {
            ended = true;
        } else {
            throw ParseError(lineno, "unknown keyword '" + key + "'");
        }
    }
    if (!have_name) throw ParseError(lineno, "empty document");
    if (!ended) throw ParseError(lineno, "missing 'end'");
    if (!have_nodes || !s || !t) throw ParseError(lineno, "graph needs 'nodes', 's' and 't'");
    g.s = *s;
    g.t = *t;
    try {
        validate_digraph(g);
    } catch (const InputError& e) {
        throw ParseError(lineno, e.what());
    }
    return g;
}

std::string serialize_digraph(const Digraph& g) {
    std::ostringstream out;
    out << "digraph " << g.name << "\nnodes " << g.nodes << "\n";
    for (const auto& [u, v] : g.edges) out << "edge " << u << ' ' << v << "\n";
    out << "s " << g.s << "\nt " << g.t << "\nend\n";
    return out.str();
}

void validate_digraph(const Digraph& g) {
    if (g.nodes == 0) throw InputError("a graph needs at least one node");
    if (g.s >= g.nodes || g.t >= g.nodes) throw InputError("s or t out of range");
    std::vector<std::size_t> out(g.nodes, 0);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : g.edges) {
        if (e.first >= g.nodes || e.second >= g.nodes) throw InputError("edge endpoint out of range");
        if (!seen.insert(e).second)
            throw InputError("duplicate edge " + std::to_string(e.first) + " -> " + std::to_string(e.second));
        if (++out[e.first] > 2) throw InputError("node " + std::to_string(e.first) + " has outdegree above 2");
    }
}

bool reachable(const Digraph& g) {
    std::vector<char> seen(g.nodes, 0);
    std::vector<std::size_t> stack{g.s};
    seen[g.s] = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : g.edges)
            if (a == u && !seen[b]) {
                seen[b] = 1;
                stack.push_back(b);
            }
    }
    return seen[g.t] != 0;
}

Dfa minimality_gadget(const Digraph& g) {
    validate_digraph(g);
    if (g.s == g.t) {
        Dfa e = empty_dfa(binary());
        e.set_name(g.name);
        return e;
    }
    const std::size_t n = g.nodes;
    // s becomes node 0 and t node n-1; the rest keep their relative order
    std::vector<std::size_t> relabel(n);
    relabel[g.s] = 0;
    relabel[g.t] = n - 1;
    for (std::size_t v = 0, next = 1; v < n; ++v)
        if (v != g.s && v != g.t) relabel[v] = next++;
    const auto moves = graph_moves(g, relabel);

    Layout L{n};
    Dfa a(binary(), L.size(), L.p(0));
    a.set_name(g.name);
    for (std::size_t i = 0; i < n; ++i) {
        a.set_transition(L.p(i), 0, L.p(i + 1 < n ? i + 1 : n - 1));
        a.set_transition(L.p(i), 1, L.node(i));

        State q_next = i == 0 ? L.q0_prime() : L.q(i + 1 < n ? i + 1 : 0);
        a.set_transition(L.q(i), 0, q_next);
        a.set_transition(L.q(i), 1, i == 0 ? L.node(0) : L.q(i));

        for (std::size_t j = 0; j < 2; ++j) {
            a.set_transition(L.node(i), static_cast<Letter>(j), L.wait(i, j));
            a.set_transition(L.wait(i, j), 0, L.wait(i, j));
            a.set_transition(L.wait(i, j), 1, L.branch(i, j));
            for (Letter x = 0; x < 2; ++x)
                a.set_transition(L.branch(i, j), x, x == j ? L.node(moves[i * 2 + x]) : L.q(i));
        }
    }
    a.set_transition(L.q0_prime(), 0, L.q(1));
    a.set_transition(L.q0_prime(), 1, L.q0_prime());
    a.set_accepting(L.node(n - 1));
    return a;
}

Dfa sprime_gadget(const Digraph& g) {
    validate_digraph(g);
    if (g.s == g.t) {
        // Σ⁺: minimal, simple co-safety and S-prime
        Dfa e(binary(), 2);
        for (Letter x = 0; x < 2; ++x) {
            e.set_transition(0, x, 1);
            e.set_transition(1, x, 1);
        }
        e.set_accepting(1);
        e.set_name(g.name);
        return e;
    }
    const Dfa base = minimality_gadget(g);
    const std::size_t q = base.size();
    const State p0 = base.initial();
    // underbar twin of x (x != p0) is q + x - 1, and z+ comes last
    auto twin = [&](State x) {
        if (x == p0) throw Error("the initial gadget state has an incoming transition");
        return static_cast<State>(q + x - 1);
    };
    const State zplus = static_cast<State>(2 * q - 1);
    const State last_node = Layout{g.nodes}.node(g.nodes - 1);
    Dfa a(binary(), 2 * q, p0);
    a.set_name(g.name);
    for (State x = 0; x < q; ++x) {
        for (Letter s = 0; s < 2; ++s) a.set_transition(x, s, twin(base.next(x, s)));
        if (x == p0) continue;
        a.set_transition(twin(x), 0, x);
        a.set_transition(twin(x), 1, x == last_node ? zplus : p0);
    }
    a.set_transition(zplus, 0, zplus);
    a.set_transition(zplus, 1, zplus);
    a.set_accepting(zplus);
    return a;
}

Dfa primefin_gadget(const Dfa& input) {
    if (!is_finite_language(input)) throw InputError("the input language must be finite");
    if (input.letters() > 2) throw InputError("the input alphabet must have at most two letters");
    Dfa a = input;
    if (a.letters() == 1) {
        // pad with a fresh second letter
        std::string fresh;
        for (const char* c : {"b", "a", "c", "d", "e", "x", "y", "z"})
            if (!a.alphabet().find(c)) {
                fresh = c;
                break;
            }
        Alphabet padded({a.alphabet().symbol(0), fresh});
        Dfa b(padded, a.size(), a.initial());
        b.set_name(a.name());
        for (State q = 0; q < a.size(); ++q) {
            b.set_accepting(q, a.accepting(q));
            b.set_transition(q, 0, a.next(q, 0));
        }
        a = std::move(b);  // letter-1 rows are fixed below
    }
    const bool padded = input.letters() == 1;
    const std::size_t m = a.size();
    const State p0 = static_cast<State>(m), p1 = p0 + 1, p2 = p0 + 2, pm = p0 + 3;
    Dfa out(a.alphabet(), m + 4, a.initial());
    out.set_name(input.name());
    for (State q = 0; q < m; ++q) {
        out.set_accepting(q, a.accepting(q));
        for (Letter x = 0; x < 2; ++x) {
            State t;
            if (a.accepting(q))
                t = p0;
            else if (padded && x == 1)
                t = pm;
            else
                t = a.next(q, x);
            out.set_transition(q, x, t);
        }
    }
    out.set_transition(p0, 0, p1);
    out.set_transition(p0, 1, pm);
    out.set_transition(p1, 0, pm);
    out.set_transition(p1, 1, p2);
    for (Letter x = 0; x < 2; ++x) {
        out.set_transition(p2, x, pm);
        out.set_transition(pm, x, pm);
    }
    out.set_accepting(p2);
    return out;
}

Dfa counter_splice(const Dfa& a, std::size_t k) {
    if (!(a.alphabet() == binary())) throw InputError("the input alphabet must be {0,1}");
    if (k == 0) throw InputError("modulus must be at least 1");
    std::optional<State> sink;
    for (State q = 0; q < a.size(); ++q) {
        if (!a.accepting(q)) continue;
        if (sink) throw InputError("the input must have at most one accepting state");
        if (a.next(q, 0) != q || a.next(q, 1) != q) throw InputError("the accepting state must be a sink");
        sink = q;
    }
    const std::size_t m = a.size();
    Dfa out(binary(), m + k, a.initial());
    out.set_name(a.name());
    for (State q = 0; q < m; ++q)
        for (Letter x = 0; x < 2; ++x) out.set_transition(q, x, a.next(q, x));
    for (std::size_t c = 0; c < k; ++c) {
        State s = static_cast<State>(m + c);
        out.set_transition(s, 0, s);
        out.set_transition(s, 1, static_cast<State>(m + (c + 1) % k));
    }
    if (sink) out.set_transition(*sink, 0, static_cast<State>(m));
    out.set_accepting(static_cast<State>(m));
    return out;
}

Dfa prime2_gadget(const Dfa& a) { return counter_splice(a, 6); }

}  // namespace finprime
