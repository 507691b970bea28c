#include <iostream>
#include <string>
#include <vector>

#include "goalclone/pipeline.hpp"

int main(int argc, char** argv) {
	std::vector<std::string> args(argv + 1, argv + argc);
	return goalclone::run(args, std::cout, std::cerr);
}
