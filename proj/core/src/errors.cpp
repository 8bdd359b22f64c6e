#include "tierfact/errors.hpp"

// Exception types are header-only; this TU anchors their vtables.

namespace tierfact {}
