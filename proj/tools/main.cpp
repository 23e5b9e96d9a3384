#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return supermonad::run_cli(argc, argv, std::cout, std::cerr);
}
