#include "ut3/cli.hpp"

int main(int argc, char** argv) { return ut3::cli::run(argc, argv); }
