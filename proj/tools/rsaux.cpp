#include "rsaux/cli/run.hpp"

int main(int argc, char** argv) { return rsaux::cli::run(argc, argv); }
