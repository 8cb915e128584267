#ifndef NONSEP_CLI_HPP
#define NONSEP_CLI_HPP

namespace nonsep {

// Entry point for the command-line tool (subcommands find / verify /
// oracle / gen / sweep).  Returns the process exit code: 0 found or ok,
// 1 precondition failure, 2 not found / verification false, 3 parse or
// config error, 4 internal contradiction.
int run_cli(int argc, const char* const* argv);

}  // namespace nonsep

#endif  // NONSEP_CLI_HPP
