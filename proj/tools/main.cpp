#include "graspsyn/cli.hpp"

int main(int argc, char** argv) {
    return graspsyn::run_cli(argc, argv);
}
