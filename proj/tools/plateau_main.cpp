#include "plateau/cli/cli.hpp"

int main(int argc, char** argv) { return plateau::cli::run(argc, argv); }
