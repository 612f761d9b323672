#include <iostream>

#include "clonekit/cli.hpp"

int main(int argc, char** argv) {
    return clonekit::run_cli(argc, argv, std::cout, std::cerr);
}
