#pragma once

namespace critgraph {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace critgraph
