#pragma once

// Registry of executable claims about the arc K = H ∪ {R0}, run per field
// order q and emitted as JSON, CSV or plain text.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arclab/serialize.hpp"

namespace arclab {

inline constexpr const char* kToolVersion = "arclab 1.0.0";

enum class Status { Verified, Refuted, Partial, Skipped };
std::string to_string(Status s);

struct ClaimInfo {
    std::string id;
    std::string name;
    std::string anchor;
    /// Orders below this are outside the claim's hypothesis and reported as SKIPPED.
    std::uint32_t min_q = 3;
};

/// All 13 claims in registry order.
const std::vector<ClaimInfo>& list_claims();
/// Throws std::invalid_argument for an unknown id.
const ClaimInfo& claim_info(std::string_view id);

struct QResult {
    std::uint32_t q = 0;
    Status status = Status::Skipped;
    Json witnesses;
    double elapsed_ms = 0;
};

struct ClaimReport {
    std::string id;
    std::string anchor;
    std::vector<QResult> q_results;
    /// REFUTED if any q refutes, else PARTIAL if any is partial, else VERIFIED
    /// if any q verified, else SKIPPED.
    Status status() const;
};

struct RunOptions {
    unsigned jobs = 0;  // 0: hardware concurrency
    std::uint64_t seed = 20240229;
    std::size_t curve_samples = 100;
    std::uint32_t curve_exhaustive_max = 13;
    std::size_t completion_cap = 4;
};

/// Throws std::invalid_argument for an unknown id or an unsupported q.
ClaimReport run_claim(std::string_view id, const std::vector<std::uint32_t>& qs, const RunOptions& opts = {});
/// Runs (claim, q) pairs concurrently and merges them in input order.
std::vector<ClaimReport> run_claims(const std::vector<std::string>& ids, const std::vector<std::uint32_t>& qs,
                                    const RunOptions& opts = {});

enum class Format { Json, Csv, Text };
/// Throws std::invalid_argument for anything but json, csv or text.
Format parse_format(std::string_view s);

struct EmitOptions {
    bool timing = true;  // false writes elapsed_ms as 0, making output reproducible
};

/// A single report is a JSON object; several form an array.
std::string emit(const std::vector<ClaimReport>& reports, Format format, const EmitOptions& opts = {});
Json report_to_json(const ClaimReport& r, const EmitOptions& opts = {});

/// {5, 7, 9, 11, 13} followed by the odd prime powers 17..199.
std::vector<std::uint32_t> default_qs();
/// Comma-separated items, each an order q or a range "a..b" (expanded to the
/// odd prime powers in it).  Throws std::invalid_argument on bad input.
std::vector<std::uint32_t> parse_q_list(std::string_view s);

}  // namespace arclab
