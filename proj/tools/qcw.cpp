#include "qcw/cli.hpp"

int main(int argc, char** argv) { return qcw::main_entry(argc, argv); }
