#include "millkit/core/ranges.hpp"

namespace millkit {

int input_key_index(std::string_view key) {
  for (std::size_t i = 0; i < kInputRanges.size(); ++i) {
    if (kInputRanges[i].key == key) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace millkit
