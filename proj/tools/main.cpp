#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "galekit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    galekit::CliResult result = galekit::run_cli(args);
    if (!result.error.empty()) std::cerr << result.error;
    if (result.output_path) {
        std::ofstream out(*result.output_path);
        if (!out) {
            std::cerr << "cannot write to '" << *result.output_path << "'\n";
            return galekit::kExitInputError;
        }
        out << result.output;
    } else {
        std::cout << result.output;
    }
    return result.exit_code;
}
