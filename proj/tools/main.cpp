#include <iostream>
#include <string>
#include <vector>

#include "g2v/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    g2v::CliResult r = g2v::run(args);
    std::cout << r.output;
    return r.status;
}
