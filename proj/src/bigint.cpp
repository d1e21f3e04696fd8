#include "nildist/bigint.hpp"

namespace nildist {

std::string format_coords(const Coords& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

}  // namespace nildist
