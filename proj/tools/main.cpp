#include "hdcov/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return hdcov::run_cli(argc, argv, std::cout, std::cerr);
}
