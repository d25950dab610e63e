#include <iostream>

#include "critgraph/cli.hpp"

int main(int argc, char** argv) {
    return critgraph::run_cli(argc, argv, std::cout, std::cerr);
}
