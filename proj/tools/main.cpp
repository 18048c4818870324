#include <iostream>

#include "orbiroot/cli.hpp"

int main(int argc, char** argv) {
    return orbiroot::run(argc, argv, std::cout, std::cerr);
}
