#include "mcx/error.hpp"

namespace mcx {

std::string format_components(const std::vector<std::size_t>& components) {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i != 0) out += ", ";
    out += "ε" + std::to_string(components[i] + 1);
  }
  return out;
}

}  // namespace mcx
