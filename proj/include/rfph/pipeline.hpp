#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rfph/distances.hpp"
#include "rfph/filtration.hpp"
#include "rfph/flow.hpp"
#include "rfph/mesh.hpp"
#include "rfph/persistence.hpp"

namespace rfph {

enum class ModelKind { DimpledSphere, SymmetricDumbbell, GMP, DegenerateDumbbell };

std::string to_string(ModelKind kind);
ModelKind model_from_string(const std::string& name);

struct MeshConfig {
    int n_theta = 50;
    int n_phi = 50;
    bool wrap = false;
};

struct SolverConfig {
    int n_points = 201;
    Schedule schedule;
};

struct FiltrationConfig {
    int d = 1;
    bool keep_zero_length = true;
};

struct ExperimentConfig {
    ModelKind model = ModelKind::SymmetricDumbbell;
    std::uint64_t seed = 1;
    std::string output_dir = "run";
    MeshConfig mesh;
    SolverConfig solver;
    FiltrationConfig filtration;
    ProfileParams profile; // alpha and seed are derived from model and seed
};

// Canonical JSON: sorted keys, two-space indent, trailing newline. Parsing
// and re-serializing reproduces the canonical text byte-exactly.
std::string config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> output_dir;
    int jobs = 1;
};

struct RunResult {
    std::filesystem::path dir;
    long snapshot_count = 0;
    StopReason stop_reason = StopReason::MaxTime;
    bool classified = false; // short runs stay unclassified
    SingularityClass classification = SingularityClass::NoBlowup;
};

// Stage entry points. simulate() creates the run directory from the config;
// the later stages read their inputs back from that directory and extend the
// manifest. Every output file is written atomically.
std::filesystem::path simulate(const ExperimentConfig& config, const RunOptions& options = {});
void topology_stage(const std::filesystem::path& run_dir, int jobs = 1);
void distances_stage(const std::filesystem::path& run_dir);
void report_stage(const std::filesystem::path& run_dir);

// All stages in order. On error the manifest is flagged partial and the
// underlying exception is rethrown.
RunResult run(const ExperimentConfig& config, const RunOptions& options = {});

struct SnapshotDiagrams {
    long snapshot = 0;
    double t = 0.0;
    std::vector<PersistenceDiagram> dims; // dimensions 0..2
};

struct CompareRow {
    long snapshot = 0;
    int dim = 0;
    DistanceTriple triple;
};

struct CompareReport {
    std::vector<std::string> warnings;
    std::vector<CompareRow> rows; // common prefix of the two runs
};

CompareReport compare(const std::filesystem::path& run_a, const std::filesystem::path& run_b);
std::string compare_to_csv(const CompareReport& report);

// Reload helpers shared by stages, tests, and the CLI.
std::vector<Snapshot> read_snapshots(const std::filesystem::path& run_dir);
std::vector<SnapshotDiagrams> read_diagram_csv(const std::filesystem::path& csv_path);

} // namespace rfph
