#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

namespace weylcalc::cli {

inline constexpr const char* kSchema = "weylcalc/1";

enum Status { kOk = 0, kInputError = 1, kFalse = 2, kPrecondition = 3 };

// job = {"command": ..., "context": {"n","f","p"}, "arguments": {...}, "seed": ...}.
// Writes one JSON document and a newline to `out`; returns the exit status.
// Results are cached under $WEYLCALC_CACHE_DIR when it is set.
int run(const nlohmann::json& job, std::ostream& out);

// Same without consulting or filling the cache.
int run_uncached(const nlohmann::json& job, std::ostream& out);

const char* const* command_names();  // null-terminated

}  // namespace weylcalc::cli
