// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace bfgeo {

inline constexpr const char* kToolName = "bfgeo";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

} // namespace bfgeo
