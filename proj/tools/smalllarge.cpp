#include <smalllarge/cli.hpp>

#include <iostream>

int main(int argc, char ** argv)
{
    std::ios::sync_with_stdio(false);
    return smalllarge::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
