// Runs the shipped verification suite and prints one line per criterion.
#include <cstdlib>
#include <iostream>
#include <string>

#include "berkline/checks.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 7;
    int jobs = 2;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
        if (arg == "--jobs" && i + 1 < argc) jobs = std::atoi(argv[++i]);
    }
    auto results = berkline::run_check_suite(std::cout, seed, jobs);
    return berkline::all_passed(results) ? 0 : 1;
}
