// SPDX-License-Identifier: Apache-2.0
#include "dirac/cli.hpp"

int main(int argc, char** argv) { return dirac::cli::main(argc, argv); }
