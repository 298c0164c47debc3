#include "finprime/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace finprime {
namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::size_t parse_number(const std::string& tok, std::size_t line, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected a number for ") + what + ", got '" + tok + "'");
    return value;
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
    std::optional<std::string> name;
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> states;
    std::optional<std::size_t> initial;
    std::optional<std::vector<std::size_t>> accepting;
    std::size_t accepting_line = 0;
    std::map<std::pair<std::size_t, Letter>, std::size_t> trans;
    bool ended = false;
    std::size_t end_line = 0;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        auto tok = tokenize(raw);
        if (tok.empty()) {
            if (eol == text.size()) break;
            continue;
        }
        if (ended) throw ParseError(lineno, "content after 'end'");
        const std::string& key = tok[0];
        if (!name) {
            if (key != "dfa" || tok.size() != 2) throw ParseError(lineno, "expected 'dfa <name>'");
            name = tok[1];
        } else if (key == "alphabet") {
            if (alphabet) throw ParseError(lineno, "duplicate 'alphabet' line");
            if (tok.size() < 2) throw ParseError(lineno, "alphabet must not be empty");
            try {
                alphabet = Alphabet(std::vector<std::string>(tok.begin() + 1, tok.end()));
            } catch (const InputError& e) {
                throw ParseError(lineno, e.what());
            }
        } else if (key == "states") {
            if (states) throw ParseError(lineno, "duplicate 'states' line");
            if (tok.size() != 2) throw ParseError(lineno, "expected 'states <k>'");
            states = parse_number(tok[1], lineno, "states");
            if (*states == 0) throw ParseError(lineno, "a DFA needs at least one state");
        } else if (key == "initial") {
            if (initial) throw ParseError(lineno, "duplicate 'initial' line");
            if (!states) throw ParseError(lineno, "'initial' before 'states'");
            if (tok.size() != 2) throw ParseError(lineno, "expected 'initial <id>'");
            initial = parse_number(tok[1], lineno, "initial");
            if (*initial >= *states) throw ParseError(lineno, "initial state " + tok[1] + " out of range");
        } else if (key == "accepting") {
            if (accepting) throw ParseError(lineno, "duplicate 'accepting' line");
            if (!states) throw ParseError(lineno, "'accepting' before 'states'");
            accepting.emplace();
            accepting_line = lineno;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                std::size_t q = parse_number(tok[i], lineno, "accepting");
                if (q >= *states) throw ParseError(lineno, "accepting state " + tok[i] + " out of range");
                accepting->push_back(q);
            }
        } else if (key == "trans") {
            if (!alphabet || !states) throw ParseError(lineno, "'trans' before 'alphabet' and 'states'");
            if (tok.size() != 4) throw ParseError(lineno, "expected 'trans <from> <sym> <to>'");
            std::size_t from = parse_number(tok[1], lineno, "trans source");
            std::size_t to = parse_number(tok[3], lineno, "trans target");
            if (from >= *states) throw ParseError(lineno, "state " + tok[1] + " out of range");
            if (to >= *states) throw ParseError(lineno, "state " + tok[3] + " out of range");
            auto a = alphabet->find(tok[2]);
            if (!a) throw ParseError(lineno, "unknown letter '" + tok[2] + "'");
            if (!trans.emplace(std::make_pair(from, *a), to).second)
                throw ParseError(lineno, "duplicate transition at state " + tok[1] + ", letter " + tok[2]);
        } else if (key == "end") {
            if (tok.size() != 1) throw ParseError(lineno, "unexpected tokens after 'end'");
            ended = true;
            end_line = lineno;
        } else if (key == "dfa") {
            throw ParseError(lineno, "duplicate 'dfa' line");
        } else {
            throw ParseError(lineno, "unknown keyword '" + key + "'");
        }
        if (eol == text.size()) break;
    }

    if (!name) throw ParseError(lineno, "empty document");
    if (!ended) throw ParseError(lineno, "missing 'end'");
    if (!alphabet) throw ParseError(end_line, "missing 'alphabet' line");
    if (!states) throw ParseError(end_line, "missing 'states' line");
    if (!initial) throw ParseError(end_line, "missing 'initial' line");
    if (!accepting) throw ParseError(end_line, "missing 'accepting' line");

    Dfa a(*alphabet, *states, static_cast<State>(*initial));
    a.set_name(*name);
    for (std::size_t q : *accepting) {
        if (a.accepting(static_cast<State>(q)))
            throw ParseError(accepting_line, "duplicate accepting state " + std::to_string(q));
        a.set_accepting(static_cast<State>(q));
    }
    for (std::size_t q = 0; q < *states; ++q) {
        for (Letter x = 0; x < alphabet->size(); ++x) {
            auto it = trans.find({q, x});
            if (it == trans.end())
                throw ParseError(end_line, "incomplete transition function at state " + std::to_string(q) +
                                               ", letter " + alphabet->symbol(x));
            a.set_transition(static_cast<State>(q), x, static_cast<State>(it->second));
        }
    }
    return a;
}

std::string serialize_dfa(const Dfa& a) {
    std::ostringstream out;
    out << "dfa " << a.name() << "\n";
    out << "alphabet";
    for (const auto& s : a.alphabet().symbols()) out << ' ' << s;
    out << "\nstates " << a.size() << "\n";
    out << "initial " << a.initial() << "\n";
    out << "accepting";
    for (State q = 0; q < a.size(); ++q)
        if (a.accepting(q)) out << ' ' << q;
    out << "\n";
    for (State q = 0; q < a.size(); ++q)
        for (Letter x = 0; x < a.letters(); ++x)
            out << "trans " << q << ' ' << a.alphabet().symbol(x) << ' ' << a.next(q, x) << "\n";
    out << "end\n";
    return out.str();
}

std::string to_dot(const Dfa& a) {
    std::ostringstream out;
    out << "digraph \"" << a.name() << "\" {\n";
    out << "  rankdir=LR;\n";
    out << "  __start [shape=point, label=\"\"];\n";
    for (State q = 0; q < a.size(); ++q)
        out << "  q" << q << " [shape=" << (a.accepting(q) ? "doublecircle" : "circle") << ", label=\"" << q
            << "\"];\n";
    out << "  __start -> q" << a.initial() << ";\n";
    for (State q = 0; q < a.size(); ++q) {
        // letters are grouped per target, targets in order of first letter
        std::vector<std::pair<State, std::string>> edges;
        for (Letter x = 0; x < a.letters(); ++x) {
            State t = a.next(q, x);
            auto it = std::find_if(edges.begin(), edges.end(), [t](const auto& e) { return e.first == t; });
            if (it == edges.end())
                edges.emplace_back(t, a.alphabet().symbol(x));
            else
                it->second += "," + a.alphabet().symbol(x);
        }
        for (const auto& [t, label] : edges) out << "  q" << q << " -> q" << t << " [label=\"" << label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace finprime
