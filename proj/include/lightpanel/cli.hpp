#pragma once

#include <iosfwd>

namespace lightpanel {

/// Entry point for the `lps` tool. Returns the process exit code.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lightpanel
