#include "griesskit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return griesskit::cli::run_cli(argc, argv, std::cout, std::cerr);
}
