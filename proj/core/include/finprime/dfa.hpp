#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace finprime {

using State = std::uint32_t;
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed documents, unknown letters, violated preconditions.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::string message_;
};

class AlphabetMismatch : public InputError {
public:
    using InputError::InputError;
};

// An enumeration or construction would exceed a configured cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);
    Alphabet(std::initializer_list<std::string> symbols);

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbol(Letter a) const { return symbols_.at(a); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    std::optional<Letter> find(std::string_view symbol) const;
    Letter letter(std::string_view symbol) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<std::string> symbols_;
};

// Complete DFA: the transition table always has an entry for every (state, letter).
class Dfa {
public:
    Dfa() = default;
    Dfa(Alphabet alphabet, std::size_t states, State initial = 0);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return accepting_.size(); }
    std::size_t letters() const { return alphabet_.size(); }
    State initial() const { return initial_; }
    State next(State q, Letter a) const { return delta_[q * letters() + a]; }
    bool accepting(State q) const { return accepting_[q] != 0; }
    const std::string& name() const { return name_; }

    void set_initial(State q);
    void set_transition(State from, Letter a, State to);
    void set_accepting(State q, bool value = true);
    void set_name(std::string name) { name_ = std::move(name); }

    // Structural equality; the name is a label and does not take part.
    bool operator==(const Dfa& other) const;

private:
    Alphabet alphabet_;
    State initial_ = 0;
    std::vector<State> delta_;
    std::vector<char> accepting_;
    std::string name_ = "A";
};

Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, const Word& w);

}  // namespace finprime
