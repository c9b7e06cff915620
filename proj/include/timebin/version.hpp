#pragma once

namespace timebin {

inline constexpr const char* version = "0.1.0";

}
