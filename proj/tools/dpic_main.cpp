#include <iostream>
#include <string>
#include <vector>

#include "dpic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dpic::cli::run_args(args, std::cout, std::cerr);
}
