#include "chowdefect/cli.hpp"

int main(int argc, char** argv) { return chowdefect::cli::run(argc, argv); }
