#include "genharm/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return genharm::run_cli(argc, argv, std::cout, std::cerr);
}
