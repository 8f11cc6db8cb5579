#pragma once

#include <string>

#include "kex/registry.hpp"

namespace kex {

enum class PoolEncoding { tabular, object };

/// Parses a pool from either encoding (auto-detected: a leading '{' means the
/// structured-object form, anything else the delimited tabular form).
/// Validates every record; errors identify the offending row and field.
/// Enrollment order is the file order unless records carry enrolled_at.
Pool parse_pool(const std::string& text, const EngineConfig& cfg);

Pool load_pool_file(const std::string& path, const EngineConfig& cfg);

/// Serializes a pool; parse_pool(serialize_pool(p)) == p for valid pools.
std::string serialize_pool(const Pool& pool, PoolEncoding encoding);

void write_pool_file(const Pool& pool, const std::string& path, PoolEncoding encoding);

/// Parses one pair record from the structured-object form (used by arrival
/// schedules, which embed pair records).
Pair parse_pair_object(const std::string& json_text, const EngineConfig& cfg);

}  // namespace kex
