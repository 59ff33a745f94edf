#include "genusone/cli.hpp"

int main(int argc, char** argv) { return genusone::run_cli(argc, argv); }
