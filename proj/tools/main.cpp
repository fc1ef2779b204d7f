#include "effalg/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return effalg::run_cli(argc, argv, std::cout, std::cerr);
}
