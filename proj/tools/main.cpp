#include "cli.hpp"

int main(int argc, char** argv) { return vecdil::cli::run(argc, argv); }
