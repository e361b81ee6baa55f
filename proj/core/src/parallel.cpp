#include "hodgekp/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hodgekp {

int worker_count() {
  if (const char* env = std::getenv("HODGEKP_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace hodgekp
