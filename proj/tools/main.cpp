#include "cli.hpp"

int main(int argc, char** argv) { return a2d::cli::dispatch(argc, argv); }
