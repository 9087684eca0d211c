#include "cli.hpp"

int main(int argc, char** argv) { return okbody::cli::run(argc, argv); }
