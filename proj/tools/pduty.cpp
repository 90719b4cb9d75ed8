#include "pduty/cli.hpp"

int main(int argc, char** argv) { return pduty::cli::main(argc, argv); }
