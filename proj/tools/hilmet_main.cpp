#include <iostream>

#include "hilmet/cli/app.hpp"

int main(int argc, char** argv) {
    return hilmet::cli::run(argc, argv, std::cout, std::cerr);
}
