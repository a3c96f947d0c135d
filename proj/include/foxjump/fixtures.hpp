#pragma once

#include <string>

#include "foxjump/laurent.hpp"

namespace foxjump {

/// Reference Fox derivative tables for cartwright_steger() under
/// cartwright_steger_assignment(), as a 3 x 12 matrix in `ctx` (which must
/// have the two free variables r, s). Row g holds dR_j/dg for j = 1..12.
LaurentMatrix cartwright_steger_tables(const ContextPtr& ctx);

/// "dR3/dx" for generator "x" and relation index 2.
std::string entry_label(const std::string& generator, std::size_t relation);

}  // namespace foxjump
