#include "uniqlab/cli.hpp"

int main(int argc, char** argv) { return uniqlab::cli::main_entry(argc, argv); }
