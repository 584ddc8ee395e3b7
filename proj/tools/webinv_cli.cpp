#include <iostream>
#include <string>
#include <vector>

#include "webinv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return webinv::cli::run_command(std::move(args), std::cin, std::cout, std::cerr);
}
