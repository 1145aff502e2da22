#include "narayana/cli.hpp"

int main(int argc, char** argv) { return narayana::cli::run(argc, argv); }
