#pragma once

namespace relosc {

inline constexpr char kVersion[] = "1.0.0";

}  // namespace relosc
