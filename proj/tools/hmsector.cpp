#include "hmsector/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return hmsector::run_main(argc, argv, std::cout, std::cerr);
}
