#include <iostream>
#include <string>
#include <vector>

#include "edcert/cli/app.hpp"

int main(int argc, char** argv) {
    return edcert::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
