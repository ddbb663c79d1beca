// signlab: exact sign laboratory CLI. Subcommand tree is assembled in
// cli.hpp; this translation unit only owns main().

#include <cstdio>
#include <exception>

#include "signlab/cli.hpp"

int main(int argc, char** argv) { return signlab::cli::run(argc, argv); }
