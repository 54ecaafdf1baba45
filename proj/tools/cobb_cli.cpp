// SPDX-License-Identifier: Apache-2.0
#include "cobb/cli.hpp"

int main(int argc, char** argv) { return cobb::cli_main(argc, argv); }
