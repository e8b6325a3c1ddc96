#pragma once

namespace opuc {

inline constexpr const char* kVersion = "0.1.0";

}
