#include <alphaspline/cli.hpp>

int main(int argc, char** argv) { return alphaspline::run_cli(argc, argv); }
