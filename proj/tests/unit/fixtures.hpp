#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "finprime/io.hpp"

inline std::string data_path(const std::string& name) { return std::string(FINPRIME_TEST_DATA) + "/" + name; }

inline std::string read_data(const std::string& name) {
    std::ifstream in(data_path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string read_data_abs(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline finprime::Dfa load_dfa(const std::string& name) { return finprime::parse_dfa(read_data(name)); }
