#include "g2schur/cli.hpp"

int main(int argc, char** argv) { return g2schur::run_cli(argc, argv); }
