#include <iostream>
#include <string>
#include <vector>

#include "rankfuzz/cli.hpp"

int main(int argc, char** argv) {
    return rankfuzz::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
