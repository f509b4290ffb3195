// Command-line front end (full subcommand set arrives with the verification layer).
#include "cybe/yangbaxter.hpp"

#include <iostream>

int main() {
    std::cout << "cybe: work in progress\n";
    return 2;
}
