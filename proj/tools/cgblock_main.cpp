#include "cgblock/cli.hpp"

int main(int argc, char** argv) { return cgblock::cli_main(argc, argv); }
