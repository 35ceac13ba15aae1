#include <iostream>
#include <string>
#include <vector>

#include "cmotif/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return cmotif::run_cli(args, std::cout, std::cerr);
}
