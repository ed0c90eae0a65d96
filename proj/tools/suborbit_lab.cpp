#include <iostream>
#include <string>
#include <vector>

#include "suborbit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return suborbit::run_subcommand(args, std::cout, std::cerr);
}
