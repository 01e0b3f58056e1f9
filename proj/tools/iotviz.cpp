#include "iotviz/service/cli.hpp"

int main(int argc, char** argv) { return iotviz::cli::run(argc, argv); }
