#include <ffpd/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return ffpd::run_cli(argc, argv, std::cout, std::cerr); }
