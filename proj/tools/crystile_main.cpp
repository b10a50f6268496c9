#include "crystile/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    crystile::CliResult result = crystile::run_cli(args);
    std::cout << result.output;
    return result.exit_code;
}
