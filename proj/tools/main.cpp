#include <iostream>
#include <string>
#include <vector>

#include "onext/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return onext::cli::run(args, std::cin, std::cout, std::cerr);
}
