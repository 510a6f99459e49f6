#include "vpmcf/cli.hpp"

int main(int argc, char** argv) { return vpmcf::cli::main(argc, argv); }
