#include "ddbt/pipeline.hpp"

#include <chrono>
#include <exception>
#include <mutex>

#include "ddbt/data.hpp"
#include "ddbt/errors.hpp"
#include "ddbt/oracle.hpp"

namespace ddbt {

std::string toString(RunStatus s) {
    switch (s) {
        case RunStatus::Ok: return "ok";
        case RunStatus::PreconditionFailure: return "precondition_failure";
        case RunStatus::Infeasible: return "infeasible";
    }
    return "unknown";
}

std::vector<std::string> PipelineReport::consistencyViolations() const {
    std::vector<std::string> v;
    auto slackLe = [](double a, double b) { return a <= b + 1e-6 * (1.0 + std::abs(b)); };
    if (slater && !regular) v.push_back("Slater holds but N is not regular");
    if (informative && *informative && !certificate) v.push_back("informative without certificate");
    if (balancing && certificate && balancing->hsv.size() != certificate->P.rows())
        v.push_back("hsv count differs from state dimension");
    if (apriori && aposteriori && !slackLe(aposteriori->gamma0, apriori->gamma))
        v.push_back("gamma0 exceeds gamma");
    if (actualError && aposteriori && !slackLe(*actualError, aposteriori->gamma0))
        v.push_back("actual error exceeds gamma0");
    if (actualError && apriori && !slackLe(*actualError, apriori->gamma))
        v.push_back("actual error exceeds gamma");
    if (ordinaryBtError && hsvTrue) {
        const Index r = config.orderR;
        const double tail = 2.0 * hsvTrue->tail(hsvTrue->size() - r).sum();
        if (!slackLe(*ordinaryBtError, tail)) v.push_back("ordinary BT error exceeds its classical bound");
    }
    return v;
}

namespace pipeline {

namespace {

class StageTimer {
public:
    StageTimer(std::map<std::string, double>& sink, std::string name)
        : sink_(sink), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
    ~StageTimer() {
        sink_[name_] += std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::map<std::string, double>& sink_;
    std::string name_;
    std::chrono::steady_clock::time_point start_;
};

void runOracle(PipelineReport& rep, const PipelineOptions& opts) {
    StageTimer t(rep.timings, "oracle");
    const StateSpaceModel& truth = rep.experiment.truth;
    const OrdinaryTruncation ot = oracle::ordinaryBalancedTruncation(truth, rep.config.orderR);
    rep.hsvTrue = ot.balancing.hsv;
    rep.ordinaryBtError = bounds::hinfNorm(bounds::assembleErrorSystem(truth, ot.rom), opts.hinfTol).norm;
}

void runStages(PipelineReport& rep, const PipelineOptions& opts) {
    const ExperimentConfig& cfg = rep.config;
    {
        StageTimer t(rep.timings, "simulate");
        rep.experiment = experiment::generate(cfg);
    }
    if (opts.oracle) runOracle(rep, opts);
    if (opts.stopAfter == Stage::Simulate) return;

    const Dims dims = rep.experiment.truth.dims();
    {
        StageTimer t(rep.timings, "build_qmi");
        rep.N = data::buildN(rep.experiment.traj, rep.experiment.noise);
        rep.inertiaN = linalg::inertia(rep.N->psi());
        rep.regular = qmi::checkRegularity(*rep.N);
        rep.slater = qmi::checkSlaterByInertia(*rep.N);
    }
    if (!rep.slater) {
        rep.status = RunStatus::PreconditionFailure;
        rep.message = "generalized Slater condition fails for N";
        return;
    }
    if (opts.stopAfter == Stage::BuildQmi) return;

    {
        StageTimer t(rep.timings, "informativity");
        try {
            rep.certificate = informativity::checkInformativity(*rep.N, dims, opts.informativity);
            rep.informative = true;
        } catch (const Infeasible& e) {
            rep.informative = false;
            rep.status = RunStatus::Infeasible;
            rep.message = e.what();
            return;
        }
    }
    if (opts.stopAfter == Stage::Informativity) return;

    {
        StageTimer t(rep.timings, "balance");
        rep.balancing = balancing::balanceFromGramians(rep.certificate->P, rep.certificate->Q);
        if (rep.hsvTrue) {
            bool dom = true;
            for (Index i = 0; i < rep.hsvTrue->size(); ++i) dom = dom && rep.balancing->hsv(i) >= (*rep.hsvTrue)(i);
            rep.hsvDominates = dom;
        }
    }
    if (opts.stopAfter == Stage::Balance) return;

    {
        StageTimer t(rep.timings, "reduce");
        balancing::requireBoundary(*rep.balancing, cfg.orderR);
        rep.setup = balancing::buildReductionSetup(*rep.N, *rep.balancing, cfg.orderR, dims);
        rep.classicalBound = balancing::classicalBound(*rep.balancing, cfg.orderR);
        rep.rom = StateSpaceModel::fromStacked(qmi::center(rep.setup->Nred), {cfg.orderR, dims.m, dims.p});
        if (opts.oracle) {
            StageTimer te(rep.timings, "oracle");
            rep.actualError =
                bounds::hinfNorm(bounds::assembleErrorSystem(rep.experiment.truth, *rep.rom), opts.hinfTol).norm;
        }
    }
    if (opts.stopAfter == Stage::Reduce) return;

    if (opts.aposteriori) {
        StageTimer t(rep.timings, "bound_aposteriori");
        try {
            rep.aposteriori = bounds::aposterioriBound(*rep.N, *rep.rom, dims, opts.bounds);
        } catch (const Infeasible& e) {
            rep.status = RunStatus::Infeasible;
            rep.message = e.what();
        }
    }
    if (opts.apriori) {
        StageTimer t(rep.timings, "bound_apriori");
        try {
            rep.apriori = bounds::aprioriBound(*rep.N, rep.setup->Nred, dims, cfg.orderR, opts.bounds);
        } catch (const Infeasible& e) {
            rep.status = RunStatus::Infeasible;
            rep.message = e.what();
        }
    }
}

}  // namespace

PipelineReport run(const ExperimentConfig& cfg, const PipelineOptions& opts) {
    PipelineReport rep;
    rep.config = cfg;
    const auto start = std::chrono::steady_clock::now();
    try {
        runStages(rep, opts);
    } catch (const PreconditionFailure& e) {
        rep.status = RunStatus::PreconditionFailure;
        rep.message = e.what();
    }
    rep.timings["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<PipelineReport> sweep(const ExperimentConfig& cfg, const std::vector<double>& sigmas,
                                  const PipelineOptions& opts, kernels::Policy policy) {
    std::vector<PipelineReport> out(sigmas.size());
    std::vector<std::exception_ptr> errors(sigmas.size());
    kernels::forEachIndex(
        static_cast<Index>(sigmas.size()),
        [&](Index i) {
            try {
                ExperimentConfig c = cfg;
                c.sigma = sigmas[i];
                c.seed = experiment::deriveSeed(cfg.seed, static_cast<std::uint64_t>(i));
                out[i] = run(c, opts);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        },
        policy);
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

io::Json toJson(const InformativityCertificate& c) {
    return {{"P", io::toJson(c.P)},         {"Q", io::toJson(c.Q)},
            {"alpha", c.alpha},             {"beta", c.beta},
            {"margin_P", c.marginP},        {"margin_Q", c.marginQ},
            {"trace_P", c.P.trace()},       {"trace_Q", c.Q.trace()},
            {"epsilon", c.epsilon},         {"solver_status", {{"P", c.statusP}, {"Q", c.statusQ}}}};
}

io::Json toJson(const BalancingResult& b) {
    return {{"T", io::toJson(b.T)},
            {"T_inv", io::toJson(b.Tinv)},
            {"hsv", io::toJson(b.hsv)},
            {"multiplicities", b.multiplicities},
            {"admissible_orders", b.boundaries()}};
}

io::Json toJson(const AprioriBound& b) {
    return {{"gamma", b.gamma}, {"tau", b.tau},         {"K", io::toJson(b.K)},
            {"delta", b.delta}, {"eta", b.eta},         {"mu", b.mu},
            {"solver_status", b.solverStatus},          {"margins", {{"lmi", b.margin}, {"epsilon", b.epsilon}}}};
}

io::Json toJson(const AposterioriBound& b) {
    return {{"gamma0", b.gamma0},
            {"tau0", b.tau0},
            {"K", io::toJson(b.K)},
            {"delta", b.delta},
            {"solver_status", b.solverStatus},
            {"margins", {{"lmi", b.margin}, {"epsilon", b.epsilon}}}};
}

io::Json toJson(const StateSpaceModel& m) {
    return {{"A", io::toJson(m.A)}, {"B", io::toJson(m.B)}, {"C", io::toJson(m.C)}, {"D", io::toJson(m.D)}};
}

io::Json toJson(const PipelineReport& r) {
    io::Json j;
    j["config"] = io::toJson(r.config);
    j["seed"] = r.config.seed;
    j["status"] = toString(r.status);
    if (!r.message.empty()) j["message"] = r.message;
    j["noise"] = {{"redraws", r.experiment.redraws}, {"phi11_rescale", r.experiment.phiRescale}};
    if (r.inertiaN) {
        j["inertia_N"] = {{"negative", r.inertiaN->nNeg}, {"zero", r.inertiaN->nZero}, {"positive", r.inertiaN->nPos}};
        j["regular"] = r.regular;
        j["slater"] = r.slater;
    }
    if (r.informative) j["informative"] = *r.informative;
    if (r.balancing) {
        j["hsv"] = io::toJson(r.balancing->hsv);
        j["multiplicities"] = r.balancing->multiplicities;
    }
    if (r.setup) j["r"] = r.setup->r;
    if (r.classicalBound) j["classical_bound"] = *r.classicalBound;
    if (r.apriori) j["gamma"] = r.apriori->gamma;
    if (r.aposteriori) j["gamma0"] = r.aposteriori->gamma0;
    io::Json orc = io::Json::object();
    if (r.hsvTrue) orc["hsv_true"] = io::toJson(*r.hsvTrue);
    if (r.ordinaryBtError) orc["ordinary_bt_error"] = *r.ordinaryBtError;
    if (r.actualError) orc["actual_error_center_rom"] = *r.actualError;
    if (r.hsvDominates) orc["hsv_dominates_true"] = *r.hsvDominates;
    if (!orc.empty()) j["oracle"] = orc;
    j["consistency_violations"] = r.consistencyViolations();
    j["timings"] = r.timings;
    return j;
}

}  // namespace pipeline
}  // namespace ddbt
