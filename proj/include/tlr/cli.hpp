#pragma once

namespace tlr {

/// Entry point of the command-line tool. Returns 0 on success, 2 on
/// validation/usage errors, 3 on enumeration-guard overflows.
int cli_main(int argc, const char* const* argv);

}  // namespace tlr
