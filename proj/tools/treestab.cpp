#include "treestab/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> guard;
    if (const char* env = std::getenv("TREESTAB_GUARD_TREES")) guard = env;
    return treestab::cli::run(args, std::cin, std::cout, std::cerr, guard);
}
