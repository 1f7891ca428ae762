#pragma once

#ifdef TROPICAL_VENDORED_JSON
#include "json.hpp"
#else
#include <nlohmann/json.hpp>
#endif

#ifdef TROPICAL_VENDORED_CLI11
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
