#include <iostream>

#include "omega/cli.hpp"

int main(int argc, char** argv)
{
    return omega::cli::run(argc, argv, std::cout, std::cerr);
}
