#include <string>
#include <vector>

#include "attinit/cli.hpp"

int main(int argc, char** argv) {
    return attinit::cli_main(std::vector<std::string>(argv + 1, argv + argc));
}
