#include "lightpanel/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return lightpanel::cli_dispatch(argc, argv, std::cout, std::cerr);
}
