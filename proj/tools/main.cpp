#include "cli.hpp"

int main(int argc, char** argv) { return cascade_cli::run_cli(argc, argv); }
