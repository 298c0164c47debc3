#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto report = finprime::cli::run_command(args);
    std::cout << report.out;
    std::cerr << report.err;
    return report.exit_code;
}
