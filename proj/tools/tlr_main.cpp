#include "tlr/cli.hpp"

int main(int argc, char** argv) { return tlr::cli_main(argc, argv); }
