#include <iostream>

#include "aarp/cli.hpp"

int main(int argc, char** argv) { return aarp::run_cli(argc, argv, std::cout, std::cerr); }
