/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HSENTROPY_CLI_HPP
#define HSENTROPY_CLI_HPP

namespace hsentropy::cli {

// Command-line entry point. Exit codes: 0 success, 1 argument error,
// 2 numerical/infeasibility error, 3 I/O error.
int run(int argc, const char* const* argv);

}  // namespace hsentropy::cli

#endif
