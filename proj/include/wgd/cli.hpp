#pragma once

#include <iosfwd>

namespace wgd::cli {

// Exit status: 0 success, 1 no partition / unstable / nonexistent, 2 bad
// input. Errors go to `err` as one line: "error: <Kind>: <message>".
int dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace wgd::cli
