#pragma once

namespace secondkind {

inline constexpr const char* kToolName = "secondkind";
inline constexpr const char* kToolVersion = "1.0.0";

}
