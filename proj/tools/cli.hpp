#pragma once

namespace cascade_cli {

// Full command-line front end; returns the process exit code
// (0 ok, 1 engine failure, 2 usage).
int run_cli(int argc, char** argv);

}  // namespace cascade_cli
