#include "sl22/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return sl22::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
