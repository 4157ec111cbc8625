#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "factcheck/config.hpp"
#include "factcheck/evaluation.hpp"
#include "factcheck/gateway.hpp"
#include "factcheck/knowledge_store.hpp"
#include "factcheck/prompts.hpp"
#include "factcheck/verdict.hpp"

namespace factcheck {

// Everything a run needs: validated config, instantiated stage backends and
// the prompt library (with any directory overrides applied). Immutable after
// construction; safe to share across claim workers.
struct PipelineContext {
    PipelineConfig config;
    Stages stages;
    PromptLibrary prompts;
};

PipelineContext make_context(PipelineConfig config);

// Claims file: a JSON array (or line-delimited records) of objects with
// "claim", optional "id" (defaults to the record's position), optional
// "label" and optional gold "questions". Throws FormatError on malformed
// records.
std::vector<Claim> load_claims(const std::filesystem::path& path);

// Run output: one JSON record per claim with the predicted label, the QA
// pairs used, attempts and timing.
void write_run_file(const std::vector<VerdictRecord>& records, const std::filesystem::path& path);
std::vector<VerdictRecord> read_run_file(const std::filesystem::path& path);

// The per-claim pipeline: expansion, retrieval, summarization, QA, verdict.
// stage_trace on the returned record lists the stages in execution order.
VerdictRecord verify_claim(const PipelineContext& ctx, const Claim& claim, const IndexedStore& store);

// Subcommand bodies. Exit status: 0 success, 1 partial failures. A failing
// claim never aborts the rest of the run.
int cmd_build_store(const PipelineContext& ctx,
                    const std::filesystem::path& docs_dir,
                    const std::filesystem::path& out_dir);

int cmd_verify(const PipelineContext& ctx,
               const std::filesystem::path& claims_file,
               const std::filesystem::path& store_dir,
               const std::filesystem::path& out_file,
               const std::optional<std::filesystem::path>& qa_dump = std::nullopt);

struct BenchmarkGrid {
    std::vector<SegmentationStrategy> strategies;
    std::vector<int> k_values;          // table columns
    std::vector<bool> reformulation;    // one table row per strategy x flag
};

struct BenchmarkTable {
    std::vector<int> k_values;
    struct Row {
        std::string label;
        std::vector<double> cells; // mean Q+A recall per k
    };
    std::vector<Row> rows;
};

std::string render_benchmark(const BenchmarkTable& table);
nlohmann::json benchmark_to_json(const BenchmarkTable& table);

// Runs the retrieval + QA + judging subset over every grid cell, building
// per-strategy indexes in memory from the raw document files, and reports
// mean Q+A recall per configuration.
BenchmarkTable run_benchmark(const PipelineContext& ctx,
                             const std::vector<Claim>& claims,
                             const std::filesystem::path& docs_dir,
                             const BenchmarkGrid& grid);

int cmd_benchmark(const PipelineContext& ctx,
                  const std::filesystem::path& claims_file,
                  const std::filesystem::path& docs_dir,
                  const BenchmarkGrid& grid,
                  const std::optional<std::filesystem::path>& json_out = std::nullopt);

int cmd_score(const PipelineContext& ctx,
              const std::filesystem::path& run_file,
              const std::filesystem::path& gold_file,
              double tau,
              const std::optional<std::filesystem::path>& json_out = std::nullopt);

} // namespace factcheck
