#pragma once

// nlohmann/json from the system when present, else the vendored single header
#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif
