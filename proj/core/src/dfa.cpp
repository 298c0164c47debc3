#include "finprime/dfa.hpp"

#include <algorithm>
#include <sstream>

namespace finprime {

ParseError::ParseError(std::size_t line, const std::string& message)
    : InputError("line " + std::to_string(line) + ": " + message), line_(line), message_(message) {}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw InputError("alphabet must not be empty");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].empty()) throw InputError("empty alphabet symbol");
        for (std::size_t j = 0; j < i; ++j)
            if (symbols_[i] == symbols_[j]) throw InputError("duplicate alphabet symbol '" + symbols_[i] + "'");
    }
}

Alphabet::Alphabet(std::initializer_list<std::string> symbols) : Alphabet(std::vector<std::string>(symbols)) {}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == symbol) return static_cast<Letter>(i);
    return std::nullopt;
}

Letter Alphabet::letter(std::string_view symbol) const {
    auto a = find(symbol);
    if (!a) throw InputError("unknown letter '" + std::string(symbol) + "'");
    return *a;
}

Dfa::Dfa(Alphabet alphabet, std::size_t states, State initial)
    : alphabet_(std::move(alphabet)), initial_(initial), delta_(states * alphabet_.size(), 0), accepting_(states, 0) {
    if (states == 0) throw InputError("a DFA needs at least one state");
    if (alphabet_.size() == 0) throw InputError("alphabet must not be empty");
    if (initial >= states) throw InputError("initial state out of range");
}

void Dfa::set_initial(State q) {
    if (q >= size()) throw InputError("initial state out of range");
    initial_ = q;
}

void Dfa::set_transition(State from, Letter a, State to) {
    if (from >= size() || to >= size()) throw InputError("state out of range");
    if (a >= letters()) throw InputError("letter out of range");
    delta_[from * letters() + a] = to;
}

void Dfa::set_accepting(State q, bool value) {
    if (q >= size()) throw InputError("accepting state out of range");
    accepting_[q] = value ? 1 : 0;
}

bool Dfa::operator==(const Dfa& other) const {
    return alphabet_ == other.alphabet_ && initial_ == other.initial_ && delta_ == other.delta_ &&
           accepting_ == other.accepting_;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    Word w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "--") continue;
        w.push_back(alphabet.letter(tok));
    }
    return w;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
    if (w.empty()) return "--";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += alphabet.symbol(w[i]);
    }
    return out;
}

}  // namespace finprime
