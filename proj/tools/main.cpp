#include <iostream>
#include <vector>

#include "gwdt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gwdt::run_cli(args, std::cout, std::cerr);
}
