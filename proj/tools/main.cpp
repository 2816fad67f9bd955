/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hsentropy/cli.hpp"

int main(int argc, char** argv) { return hsentropy::cli::run(argc, argv); }
