#include "rpl/cli.h"

int main(int argc, char** argv) { return rpl::run_cli(argc, argv); }
