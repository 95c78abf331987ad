#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ddbt/balancing.hpp"
#include "ddbt/bounds.hpp"
#include "ddbt/experiment.hpp"
#include "ddbt/informativity.hpp"
#include "ddbt/io.hpp"

namespace ddbt {

enum class Stage { Simulate, BuildQmi, Informativity, Balance, Reduce, Bounds };

struct PipelineOptions {
    Stage stopAfter = Stage::Bounds;
    bool apriori = true;
    bool aposteriori = true;
    bool oracle = true;
    double hinfTol = 1e-8;
    InformativityOptions informativity;
    BoundOptions bounds;
};

enum class RunStatus { Ok, PreconditionFailure, Infeasible };
std::string toString(RunStatus s);

struct PipelineReport {
    ExperimentConfig config;
    RunStatus status = RunStatus::Ok;
    std::string message;

    Experiment experiment;
    std::optional<QmiSet> N;
    std::optional<Inertia> inertiaN;
    bool slater = false;
    bool regular = false;
    std::optional<bool> informative;
    std::optional<InformativityCertificate> certificate;
    std::optional<BalancingResult> balancing;
    std::optional<ReductionSetup> setup;
    std::optional<double> classicalBound;
    std::optional<StateSpaceModel> rom;  // center of the reduced set
    std::optional<AprioriBound> apriori;
    std::optional<AposterioriBound> aposteriori;

    std::optional<Vector> hsvTrue;
    std::optional<double> ordinaryBtError;
    std::optional<double> actualError;  // ‖Σ_true − Σ̂₀‖ for the center ROM
    std::optional<bool> hsvDominates;

    std::map<std::string, double> timings;  // seconds per stage

    // Violations of the report's internal consistency rules; empty when consistent.
    std::vector<std::string> consistencyViolations() const;
};

namespace pipeline {

// Runs the stages in order up to opts.stopAfter. Infeasibility and failed
// preconditions are recorded in the report; other errors propagate.
PipelineReport run(const ExperimentConfig& cfg, const PipelineOptions& opts = {});

// One run per σ with seeds deriveSeed(cfg.seed, i); results in the given σ order.
std::vector<PipelineReport> sweep(const ExperimentConfig& cfg, const std::vector<double>& sigmas,
                                  const PipelineOptions& opts = {}, kernels::Policy policy = kernels::Policy::Parallel);

io::Json toJson(const PipelineReport& report);
io::Json toJson(const InformativityCertificate& c);
io::Json toJson(const BalancingResult& b);
io::Json toJson(const AprioriBound& b);
io::Json toJson(const AposterioriBound& b);
io::Json toJson(const StateSpaceModel& m);

}  // namespace pipeline
}  // namespace ddbt
