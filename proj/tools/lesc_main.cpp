#include <iostream>
#include <string>
#include <vector>

#include "lesc/cli.hpp"

int main(int argc, char** argv) {
	std::vector<std::string> args(argv + 1, argv + argc);
	return lesc::run_cli(args, std::cout, std::cerr);
}
