#include <iostream>
#include <string>
#include <vector>

#include "qcent/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qcent::cli::run(args, std::cout, std::cerr);
}
