#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "ivp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    ivp::cli::Options options;
    options.color = isatty(STDOUT_FILENO) && std::getenv("IVP_NO_COLOR") == nullptr;
    auto result = ivp::cli::run(args, options);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
