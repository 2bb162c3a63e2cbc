#pragma once

// The mcx command-line front end, callable in-process.
//
//   mcx eval    [expr ...]  evaluate expressions (or one per input line)
//   mcx convert             NumberDocument -> other representation
//   mcx conj    [expr]      apply a composition of conjugations (--mask)
//   mcx norm    [expr]      multiperplex-valued norm
//   mcx ideal               ideal-lattice query document
//   mcx det | inv | eig     MatrixDocument commands
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 domain error (null cone,
// singular, not self-adjoint, bad index), 4 I/O error.

#include <iosfwd>
#include <string>
#include <vector>

namespace mcx::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitParse = 2, kExitDomain = 3, kExitIo = 4 };

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace mcx::cli
