#include <iostream>
#include <string>
#include <vector>

#include "irratio/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return irratio::cli::run(args, std::cout, std::cerr);
}
