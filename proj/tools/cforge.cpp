#include "cforge/cli.hpp"

int main(int argc, char** argv) { return cforge::cli::main(argc, argv); }
