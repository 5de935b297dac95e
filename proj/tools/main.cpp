#include "ielkit/cli.hpp"

int main(int argc, char** argv) { return ielkit::cli::run(argc, argv); }
