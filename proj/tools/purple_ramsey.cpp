#include <iostream>

#include "purple/cli.hpp"

int main(int argc, char** argv) {
    return purple::run_cli(argc, argv, std::cout, std::cerr);
}
