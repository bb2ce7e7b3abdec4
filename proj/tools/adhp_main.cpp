#include "adhp/harness.hpp"

int main(int argc, char** argv) { return adhp::cli_main(argc, argv); }
