#include "tierfact/util/rng.hpp"

namespace tierfact::util {}
