#include "llab/errors.hpp"

#include <sstream>

namespace llab {

Caps& caps() {
  static Caps c;
  return c;
}

void apply_caps_string(const std::string& spec, Caps& c) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("bad caps entry '" + item + "'");
    std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      value = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("bad caps value in '" + item + "'");
    }
    if (key == "group") c.group_order = value;
    else if (key == "subgroups") c.subgroup_count = value;
    else if (key == "normal") c.partial_normal_elements = value;
    else if (key == "pgroup") {
      if (value > 64) throw InputError("pgroup cap cannot exceed 64");
      c.p_group_order = value;
    } else if (key == "maps") c.stored_maps = value;
    else throw InputError("unknown caps key '" + key + "'");
  }
}

}  // namespace llab
