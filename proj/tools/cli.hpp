#pragma once

#include <iosfwd>

namespace bicover::cli {

// Exit codes: 0 ok, 1 semantic failure, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bicover::cli
