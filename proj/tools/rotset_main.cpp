#include "rotset/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return rotset::run_cli(argc, argv, std::cout, std::cerr);
}
