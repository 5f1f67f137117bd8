#include <iostream>

#include "ballcut/cli.hpp"

int main(int argc, char** argv)
{
    return ballcut::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
