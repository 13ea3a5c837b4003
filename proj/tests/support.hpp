#pragma once

#include <string>

#include "knotvol/diagram.hpp"
#include "knotvol/knotbase.hpp"

namespace support {

inline const std::string kTablePath = std::string(KNOTVOL_DATA_DIR) + "/knot_table.csv";
inline const std::string kJonesFixture = std::string(KNOTVOL_TEST_DATA_DIR) + "/knotinfo_jones.csv";

inline const knotvol::KnotTable& table() {
  static const knotvol::KnotTable t(knotvol::load_table(kTablePath).records);
  return t;
}

inline knotvol::LinkDiagram knot(const std::string& name) {
  return knotvol::parse_pd(table().find(name)->pd);
}

}  // namespace support
