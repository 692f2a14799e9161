#include "operforge/cli.hpp"

int main(int argc, char** argv) { return operforge::cli::main(argc, argv); }
