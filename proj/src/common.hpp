#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jclean {

// Canonical element index of a finite ring.  Every ring built by this
// library indexes its elements densely in [0, size), so an element is
// just its index and all arithmetic goes through lookup tables.
using Elem = std::uint16_t;

// User-supplied data is malformed: bad spec, ragged table, unparsable literal.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical precondition of the requested operation does not hold
// (non-local base ring, non-central twist, wrong kind of element, ...).
struct hypothesis_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested computation would exceed a configured cap.
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A fact the library guarantees failed to hold at runtime.  Reaching this
// means either a bug or a genuine counterexample; it is never swallowed.
struct check_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resource limits for exhaustive work.  Everything is overridable via the
// JCLEAN_CAPS environment variable ("key=value,key=value") or per call.
struct Caps {
  std::uint32_t axiom_cap = 256;       // max |R| for exhaustive axiom verification
  std::uint32_t analysis_cap = 4096;   // max |R| for full ring analysis
  std::uint64_t enum_cap = 1u << 20;   // max |M2(R;s)| for exhaustive matrix sweeps
  std::uint32_t similarity_cap = 16;   // max |R| for similarity/equivalence searches
  std::uint32_t sample_size = 2000;    // sample count for sweeps run above a cap
  std::uint64_t seed = 0;              // RNG seed for sampled sweeps
  std::uint32_t series_precision = 3;  // default truncation order for power series
  std::uint64_t series_exhaustive_cap = 4096;  // max |M2| for exhaustive series sweeps

  // Parses overrides like "enum=2097152,sample=5000".  Unknown keys or
  // non-numeric values raise input_error.
  void apply(const std::string& overrides);

  // Defaults overlaid with the JCLEAN_CAPS environment variable, if set.
  static Caps from_env();
};

}  // namespace jclean
