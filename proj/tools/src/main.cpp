#include "evagent_cli/cli.hpp"

int main(int argc, char** argv) { return evagent::cli::cli_main(argc, argv); }
