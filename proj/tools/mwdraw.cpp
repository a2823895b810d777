#include "mw/cli_io.hpp"

int main(int argc, char** argv) { return mw::cli_main(argc, argv); }
