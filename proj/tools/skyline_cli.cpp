#include "skyline/cli.hpp"

int main(int argc, char** argv) {
    return skyline::cli::run_main(argc, argv);
}
