#include <unicx/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return unicx::dispatch(argc, argv, std::cout, std::cerr); }
