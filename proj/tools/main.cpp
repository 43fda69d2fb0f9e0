#include <picard/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    return picard::cli::main_entry(argc, argv, std::cout, std::cerr);
}
