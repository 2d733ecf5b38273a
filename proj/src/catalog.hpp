#pragma once

#include <string>
#include <vector>

#include "finite_ring.hpp"

namespace jclean {

struct CatalogEntry {
  std::string name;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

// input_error on an unknown name.
RingSpec catalog_spec(const std::string& name);

bool catalog_has(const std::string& name);

}  // namespace jclean
