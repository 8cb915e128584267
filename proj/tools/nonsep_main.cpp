#include "nonsep/cli.hpp"

int main(int argc, char** argv) { return nonsep::run_cli(argc, argv); }
