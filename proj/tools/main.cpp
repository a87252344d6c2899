#include <iostream>
#include <string>
#include <vector>

#include "indkernel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return indkernel::run_command(args, std::cout, std::cerr);
}
