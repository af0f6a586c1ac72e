#include <iostream>
#include <string>
#include <vector>

#include "primeray/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return primeray::cli::run(std::move(args), std::cout, std::cerr);
}
