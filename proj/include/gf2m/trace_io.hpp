#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "gf2m/serial.hpp"

namespace gf2m {

/// One line per record: cycle, b_bit, after_G, after_H (hex elements).
std::string trace_to_text(std::span<const TraceRecord> trace);

/// Same fields with a header line.
std::string trace_to_csv(std::span<const TraceRecord> trace);

nlohmann::ordered_json trace_to_json(std::span<const TraceRecord> trace);

} // namespace gf2m
