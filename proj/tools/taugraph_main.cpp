#include "taugraph/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return taugraph::cli::run(std::move(args), std::cout, std::cerr);
}
