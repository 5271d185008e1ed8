#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "moorex/expansion.hpp"
#include "moorex/graph.hpp"

namespace moorex {

using Json = nlohmann::json;

// Fixed 12-significant-digit rendering used by the text report format.
std::string format_double(double v);

// Deterministic plain-text rendering of a report tree: sorted keys, stable
// numeric formatting, two-space indentation, LF endings.
std::string render_text(const Json& j);

// Report tree serialized per --format (text | structured).
std::string render_report(const Json& j, const std::string& format);

struct AnalyzeOptions {
    int exact_cap = kDefaultSubsetCap;
    std::optional<int> force_d;
    std::optional<double> tol;
};

// Full per-graph analysis: metadata, Moore profile, spectrum, exhaustive
// expansion (when n is small enough), every applicable closed-form bound
// checked against the measurements, and the eigenvalue certificate.
Json analyze_report(const Graph& g, const AnalyzeOptions& opts = {});

// Bound table for explicit parameters rather than a measured graph.
Json bounds_report(int d, int k, const BigInt& n, bool directed);

// Per-family guarantee table: the published closed-form entries for a known
// construction next to this library's bound calculators evaluated at the
// family's exact parametric size. Disagreements are flagged, never
// reconciled. Families: debruijn, kautz, polarity, mms, canale_gomez, alegre.
Json table2_report(const std::string& family, int d, int k);

struct VerifyResult {
    bool pass = false;
    Json report;
};

// Certification run for one graph: certificate checks, walk-matrix
// identities, bound dominance against the exhaustive oracle.
VerifyResult verify_graph(const Graph& g, const AnalyzeOptions& opts = {});

// Built-in family grid plus the polynomial identity checks.
VerifyResult verify_suite(const AnalyzeOptions& opts = {});

}  // namespace moorex
