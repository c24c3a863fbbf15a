#pragma once

namespace decosim {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kSummarySchemaVersion = 1;

}  // namespace decosim
