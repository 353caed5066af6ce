#include "qident/harness.hpp"

int main(int argc, char** argv) { return qident::cli_main(argc, argv); }
