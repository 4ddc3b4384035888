#pragma once

#include <iosfwd>

namespace entprime::selftest {

enum class Level { Quick, Full };

// Runs the oracle-triangle and invariant suites, printing one status line
// per check. Returns true iff every check passed.
bool run(Level level, std::ostream& out);

}  // namespace entprime::selftest
