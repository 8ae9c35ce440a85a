#include <iostream>

#include "bch_atlas/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bch_atlas::cli::run(args, std::cout, std::cerr);
}
