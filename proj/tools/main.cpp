#include "diskgroups/cli.hpp"

int main(int argc, char** argv) { return diskgroups::cli_main(argc, argv); }
