#include <iostream>

#include "berkline/cli.hpp"

int main(int argc, char** argv) {
    return berkline::cli_main(argc, argv, std::cout, std::cerr);
}
