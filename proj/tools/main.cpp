#include "cli.hpp"

int main(int argc, char** argv) { return svn::cli::run(argc, argv); }
