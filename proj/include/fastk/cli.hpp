#pragma once

#include <iosfwd>

namespace fastk {

/// Entry point of the `fastk` tool, with the standard streams injectable for
/// testing. Exit codes: 0 success or YES, 1 NO or verification mismatch,
/// 2 usage or format error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fastk
