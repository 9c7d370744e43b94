// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file report.hpp
 * @brief JSON report payloads and the versioned envelope.
 *
 * All machine output is deterministic: ordered keys, values derived only
 * from the inputs (seeds included), never from wall clocks. Big integers
 * render as JSON numbers when they fit in 64 bits and as decimal strings
 * otherwise.
 */

#pragma once

#include <bfgeo/dimension.hpp>
#include <bfgeo/poly_io.hpp>
#include <bfgeo/rankprobe.hpp>

#include <optional>
#include <string>

namespace bfgeo::report {

Json big_to_json(const BigInt& value);

Json to_json(const dimension::GapReport& report);
Json to_json(const rankprobe::ProfileProbe& probe);
Json to_json(const rankprobe::RankReport& report);

/// {"tool", "version", "schema", "command", ["seed", "prime",] "payload"}.
Json envelope(const std::string& command, Json payload,
              std::optional<std::uint64_t> seed = std::nullopt,
              std::optional<std::uint32_t> prime = std::nullopt);

Json error_json(const std::string& code, const std::string& message);

/// Envelope serialized for stdout: 2-space indent plus trailing newline,
/// byte-identical across repeated invocations.
std::string render(const Json& j);

} // namespace bfgeo::report
