#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entcoh {

/// Batch command driver behind the binary's main(). Subcommands:
///   check FILE                     axiom reports for every block present
///   galois FILE                    Galois analysis of a coaction
///   cohomology FILE [M] [-n N]     entwined cohomology table
///   hochschild FILE [M] [-n N]     Hochschild cohomology table
///   verify FILE [M] [-n N]         theorem report (psi-table vs HH-table)
///   zoo [NAME] [--emit PATH]       built-in examples
///   fuzz [--dim-a ...]             seeded randomized property testing
/// [M] is --bimodule FILE or --self; --json switches to the machine-readable
/// report. Exit codes: 0 success/verified, 1 failed check or mismatch,
/// 2 usage or parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace entcoh
