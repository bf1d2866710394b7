#pragma once

#include <string_view>
#include <vector>

#include "ladget/gadget.hpp"

namespace ladget {

/// Built-in gadgets: the primitives MOV, NOT, KNOT, ROT, ROTS and the
/// minimal ladgets NAND7, OR8, AND8, XOR10, XNOR10. Throws UnknownFixture.
GadgetConfig builtin(std::string_view name);

std::vector<std::string_view> builtin_names();

}  // namespace ladget
