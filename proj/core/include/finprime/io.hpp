#pragma once

#include <string>
#include <string_view>

#include "finprime/dfa.hpp"

namespace finprime {

Dfa parse_dfa(std::string_view text);
std::string serialize_dfa(const Dfa& a);
std::string to_dot(const Dfa& a);

}  // namespace finprime
