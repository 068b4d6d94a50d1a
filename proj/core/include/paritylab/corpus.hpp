#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "paritylab/descent.hpp"
#include "paritylab/parity.hpp"

namespace paritylab {

struct CorpusSpec {
    std::string family = "two"; // "two" | "three"
    long a_lo = -10, a_hi = 10; // a (two) or a1 (three)
    long b_lo = -10, b_hi = 10; // b (two) or a3 (three)
    std::vector<long> twists = {1, -1, 2, -2, 3, -3, 5, -5}; // three-family only
    unsigned long seed = 0;
    bool with_oracle = true; // descent cross-check (two-family only)
};

struct CurveContext {
    std::string id;
    IsogenyContext ctx;
    long a = 0, b = 0;              // two-family parameters
    long a1 = 0, a3 = 0, twist = 1; // three-family parameters
};

struct SkipCounts {
    long degenerate = 0;
    long additive_at_3 = 0; // three-family hypothesis filter
    long total_candidates = 0;
};

/// Deterministic enumeration; throws EmptyCorpus when nothing survives.
std::vector<CurveContext> generate(const CorpusSpec&, SkipCounts&);

struct CurveVerdict {
    CurveContext curve;
    GlobalReport global;
    int oracle = 0; // two-family: descent parity, must equal S
    std::vector<Int> selmer_phi, selmer_phihat;
    bool pass = false;
    std::string error; // nonempty when verification threw
};

CurveVerdict verify_curve(const CurveContext&, unsigned long seed, bool with_oracle);

struct RunSummary {
    long total = 0, passed = 0, failed = 0, errored = 0;
    long hypothesis_limited = 0; // curves with at least one place excluded
    SkipCounts skips;
};

/// Runs the whole corpus, JSONL to `out_jsonl` (empty = no file) and an
/// optional CSV summary; `jobs` worker threads, verdicts written in
/// enumeration order regardless.
RunSummary run_corpus(const CorpusSpec&, const std::string& out_jsonl,
                      const std::string& out_csv, bool fail_fast, int jobs);

// JSON encodings (exact rationals as "num/den" strings)
nlohmann::json model_json(const Model&);
Model model_from_json(const nlohmann::json&);
nlohmann::json reduction_json(const LocalReduction&);
nlohmann::json report_json(const LocalParityReport&);
nlohmann::json verdict_json(const CurveVerdict&);

} // namespace paritylab
