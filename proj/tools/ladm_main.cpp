#include "ladm/cli_app.hpp"

int main(int argc, char** argv) {
    return ladm::cli::run_cli(argc, argv);
}
