#include "gptcones/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const gptcones::CommandResult result = gptcones::run_cli(args);
    std::cout << result.report.dump(2) << "\n";
    return result.exit_code;
}
