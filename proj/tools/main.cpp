#include "intpos/cli.hpp"

int main(int argc, char** argv) { return intpos::run_cli(argc, argv); }
