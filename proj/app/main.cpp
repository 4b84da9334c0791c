#include <iostream>
#include <string>
#include <vector>

#include "uqsl2/cli.hpp"

int main(int argc, char** argv) {
    return uqsl2::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
