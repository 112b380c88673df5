#include "qcoh/cli.hpp"

int main(int argc, char** argv) { return qcoh::run(argc, argv); }
