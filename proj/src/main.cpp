#include <string>
#include <vector>

#include "corfun/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return corfun::cli::run(args);
}
