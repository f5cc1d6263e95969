#include "monoendo/error.hpp"

#include <sstream>

namespace monoendo::detail {

void check_failed(const char* expr, const std::string& msg, const char* file, int line) {
  std::ostringstream os;
  os << "check failed: " << expr << " (" << msg << ") at " << file << ":" << line;
  throw InternalError(os.str());
}

}  // namespace monoendo::detail
