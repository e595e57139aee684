#include <iostream>

#include <telegraph/app.hpp>

int main(int argc, char **argv)
{
    return telegraph::cli_main(argc, argv, std::cout, std::cerr);
}
