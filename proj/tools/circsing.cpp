#include <iostream>
#include <string>
#include <vector>

#include "circsing/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return circsing::cli::run(args, std::cout, std::cerr);
}
