#include "commands.hpp"

int main(int argc, char** argv) { return lpball::cli::run_cli(argc, argv); }
