#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ddbt/data.hpp"
#include "ddbt/errors.hpp"
#include "ddbt/io.hpp"
#include "ddbt/oracle.hpp"
#include "ddbt/pipeline.hpp"

namespace fs = std::filesystem;
using namespace ddbt;

namespace {

enum Exit { kOk = 0, kConfig = 1, kPrecondition = 2, kInfeasible = 3, kInternal = 4 };

struct Flags {
    std::string config;
    std::string out = ".";
    std::optional<std::uint64_t> seed;
    std::optional<double> sigma;
    std::optional<Index> order;
    std::string sweep;
};

std::vector<double> parseSweep(const std::string& spec) {
    const std::string prefix = "sigma=";
    if (spec.rfind(prefix, 0) != 0) throw InvalidConfig("--sweep expects sigma=a,b,c");
    std::vector<double> out;
    std::stringstream ss(spec.substr(prefix.size()));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw InvalidConfig("--sweep: bad value '" + tok + "'");
        }
        if (out.back() < 0.0) throw InvalidConfig("--sweep: sigma must be non-negative");
    }
    if (out.empty()) throw InvalidConfig("--sweep: no values");
    return out;
}

ExperimentConfig makeConfig(const Flags& f) {
    ExperimentConfig cfg = f.config.empty() ? ExperimentConfig{} : io::loadConfig(f.config);
    if (f.seed) cfg.seed = *f.seed;
    if (f.sigma) {
        if (*f.sigma < 0.0) throw InvalidConfig("--sigma must be non-negative");
        cfg.sigma = *f.sigma;
    }
    if (f.order) {
        if (*f.order < 1) throw InvalidConfig("--order must be positive");
        cfg.orderR = *f.order;
    }
    return cfg;
}

void writeModel(const fs::path& dir, const std::string& prefix, const StateSpaceModel& m) {
    io::writeCsv(dir / (prefix + "A.csv"), m.A);
    io::writeCsv(dir / (prefix + "B.csv"), m.B);
    io::writeCsv(dir / (prefix + "C.csv"), m.C);
    io::writeCsv(dir / (prefix + "D.csv"), m.D);
}

void writeTable(const fs::path& path, const std::string& header, const std::vector<std::vector<std::string>>& rows) {
    std::ofstream os(path);
    if (!os) throw Error("cannot write " + path.string());
    os << header << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
}

std::string optNum(const std::optional<double>& v) { return v ? io::formatDouble(*v) : ""; }

void writeHsvTable(const fs::path& path, const std::vector<const PipelineReport*>& reps) {
    std::vector<std::vector<std::string>> rows;
    for (const PipelineReport* r : reps) {
        if (!r->balancing) continue;
        for (Index i = 0; i < r->balancing->hsv.size(); ++i)
            rows.push_back({std::to_string(i + 1), io::formatDouble(r->config.sigma),
                            io::formatDouble(r->balancing->hsv(i))});
    }
    writeTable(path, "index,sigma,value", rows);
}

void writeBoundsTable(const fs::path& path, const std::vector<const PipelineReport*>& reps) {
    std::vector<std::vector<std::string>> rows;
    for (const PipelineReport* r : reps) {
        rows.push_back({io::formatDouble(r->config.sigma),
                        optNum(r->apriori ? std::optional<double>(r->apriori->gamma) : std::nullopt),
                        optNum(r->aposteriori ? std::optional<double>(r->aposteriori->gamma0) : std::nullopt),
                        optNum(r->actualError), optNum(r->ordinaryBtError)});
    }
    writeTable(path, "sigma,gamma,gamma0,actual_error,ordinary_bt_error", rows);
}

void writeHsvTrue(const fs::path& path, const Vector& hsv) {
    std::vector<std::vector<std::string>> rows;
    for (Index i = 0; i < hsv.size(); ++i) rows.push_back({std::to_string(i + 1), io::formatDouble(hsv(i))});
    writeTable(path, "index,value", rows);
}

void writeStageArtifacts(const std::string& cmd, const fs::path& out, const PipelineReport& r) {
    const bool all = cmd == "pipeline";
    if ((all || cmd == "simulate")) {
        const auto& e = r.experiment;
        io::writeCsv(out / "U_minus.csv", e.traj.Uminus);
        io::writeCsv(out / "X.csv", e.traj.Xfull);
        io::writeCsv(out / "Y_minus.csv", e.traj.Yminus);
        io::writeCsv(out / "Phi11.csv", e.noise.phi11);
        io::writeCsv(out / "Phi12.csv", e.noise.phi12);
        io::writeCsv(out / "Phi22.csv", e.noise.phi22);
    }
    if ((all || cmd == "build-qmi") && r.N) {
        io::writeCsv(out / "N.csv", r.N->psi());
        io::writeJson(out / "slater.json",
                      {{"inertia", {{"negative", r.inertiaN->nNeg}, {"zero", r.inertiaN->nZero},
                                    {"positive", r.inertiaN->nPos}}},
                       {"regular", r.regular},
                       {"slater", r.slater}});
    }
    if ((all || cmd == "check-informativity") && r.certificate)
        io::writeJson(out / "certificate.json", pipeline::toJson(*r.certificate));
    if ((all || cmd == "balance") && r.balancing) {
        io::writeJson(out / "balancing.json", pipeline::toJson(*r.balancing));
        io::writeCsv(out / "T.csv", r.balancing->T);
        writeHsvTable(out / "hsv.csv", {&r});
        if (r.setup) io::writeCsv(out / "N_red.csv", r.setup->Nred.psi());
    }
    if ((all || cmd == "reduce") && r.rom) {
        writeModel(out, "rom_", *r.rom);
        io::Json meta = {{"r", r.setup->r}, {"ell", r.setup->ell}, {"classical_bound", *r.classicalBound}};
        io::writeJson(out / "reduced_model.json", meta);
    }
    if ((all || cmd == "bound-apriori") && r.apriori)
        io::writeJson(out / "bound_apriori.json", pipeline::toJson(*r.apriori));
    if ((all || cmd == "bound-aposteriori") && r.aposteriori)
        io::writeJson(out / "bound_aposteriori.json", pipeline::toJson(*r.aposteriori));
    if (all || cmd == "oracle") {
        if (r.hsvTrue) writeHsvTrue(out / "hsv_true.csv", *r.hsvTrue);
    }
}

PipelineOptions optionsFor(const std::string& cmd) {
    PipelineOptions o;
    o.oracle = cmd == "pipeline";
    if (cmd == "simulate") o.stopAfter = Stage::Simulate;
    else if (cmd == "build-qmi") o.stopAfter = Stage::BuildQmi;
    else if (cmd == "check-informativity") o.stopAfter = Stage::Informativity;
    else if (cmd == "balance") o.stopAfter = Stage::Reduce;  // N_{V,W} needs the reduction setup
    else if (cmd == "reduce") o.stopAfter = Stage::Reduce;
    else if (cmd == "bound-apriori") o.aposteriori = false;
    else if (cmd == "bound-aposteriori") o.apriori = false;
    return o;
}

int exitFor(const PipelineReport& r) {
    switch (r.status) {
        case RunStatus::Ok: return r.consistencyViolations().empty() ? kOk : kInternal;
        case RunStatus::PreconditionFailure: return kPrecondition;
        case RunStatus::Infeasible: return kInfeasible;
    }
    return kInternal;
}

io::Json summaryOf(const PipelineReport& r) {
    io::Json s = {{"sigma", r.config.sigma}, {"seed", r.config.seed}, {"status", toString(r.status)}};
    if (!r.message.empty()) s["message"] = r.message;
    if (r.inertiaN) s["slater"] = r.slater;
    if (r.informative) s["informative"] = *r.informative;
    if (r.balancing) s["hsv"] = io::toJson(r.balancing->hsv);
    if (r.classicalBound) s["classical_bound"] = *r.classicalBound;
    if (r.apriori) s["gamma"] = r.apriori->gamma;
    if (r.aposteriori) s["gamma0"] = r.aposteriori->gamma0;
    if (r.actualError) s["actual_error"] = *r.actualError;
    if (r.ordinaryBtError) s["ordinary_bt_error"] = *r.ordinaryBtError;
    const auto v = r.consistencyViolations();
    if (!v.empty()) s["consistency_violations"] = v;
    return s;
}

int runOracleCommand(const Flags& f) {
    const ExperimentConfig cfg = makeConfig(f);
    const StateSpaceModel truth = experiment::loadSystem(cfg);
    const OrdinaryTruncation ot = oracle::ordinaryBalancedTruncation(truth, cfg.orderR);
    const HinfResult err = bounds::hinfNorm(bounds::assembleErrorSystem(truth, ot.rom), 1e-8);
    const double classical = balancing::classicalBound(ot.balancing, cfg.orderR);
    fs::create_directories(f.out);
    writeHsvTrue(fs::path(f.out) / "hsv_true.csv", ot.balancing.hsv);
    writeModel(f.out, "ordinary_rom_", ot.rom);
    io::Json j = {{"command", "oracle"},
                  {"status", "ok"},
                  {"r", cfg.orderR},
                  {"hsv_true", io::toJson(ot.balancing.hsv)},
                  {"ordinary_bt_error", err.norm},
                  {"hinf_certified", err.certified},
                  {"classical_bound", classical}};
    io::writeJson(fs::path(f.out) / "oracle.json", j);
    std::cout << j.dump() << std::endl;
    return kOk;
}

int runCommand(const std::string& cmd, const Flags& f) {
    if (cmd == "oracle") return runOracleCommand(f);
    const ExperimentConfig cfg = makeConfig(f);
    const fs::path out(f.out);
    fs::create_directories(out);
    const PipelineOptions opts = optionsFor(cmd);

    if (!f.sweep.empty()) {
        if (cmd != "pipeline") throw InvalidConfig("--sweep is only available for the pipeline command");
        const std::vector<double> sigmas = parseSweep(f.sweep);
        const std::vector<PipelineReport> reps = pipeline::sweep(cfg, sigmas, opts);
        std::vector<const PipelineReport*> ptrs;
        io::Json all = io::Json::array(), summaries = io::Json::array();
        int code = kOk;
        for (const auto& r : reps) {
            ptrs.push_back(&r);
            all.push_back(pipeline::toJson(r));
            summaries.push_back(summaryOf(r));
            code = std::max(code, exitFor(r));
        }
        if (!reps.empty() && reps.front().hsvTrue) writeHsvTrue(out / "hsv_true.csv", *reps.front().hsvTrue);
        writeHsvTable(out / "hsv.csv", ptrs);
        writeBoundsTable(out / "bounds.csv", ptrs);
        io::writeJson(out / "report.json", {{"runs", all}});
        std::cout << io::Json{{"command", cmd}, {"runs", summaries}}.dump() << std::endl;
        return code;
    }

    const PipelineReport rep = pipeline::run(cfg, opts);
    writeStageArtifacts(cmd, out, rep);
    if (cmd == "pipeline") {
        writeHsvTable(out / "hsv.csv", {&rep});
        writeBoundsTable(out / "bounds.csv", {&rep});
    }
    io::writeJson(out / "report.json", pipeline::toJson(rep));
    io::Json s = summaryOf(rep);
    s["command"] = cmd;
    std::cout << s.dump() << std::endl;
    return exitFor(rep);
}

void printError(const std::string& cmd, const std::string& status, const std::string& what) {
    std::cout << io::Json{{"command", cmd}, {"status", status}, {"message", what}}.dump() << std::endl;
    std::cerr << "ddbt: " << what << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Data-driven balanced truncation with error bounds"};
    app.require_subcommand(1, 1);
    Flags f;
    const std::vector<std::string> names = {"simulate", "build-qmi", "check-informativity", "balance", "reduce",
                                            "bound-apriori", "bound-aposteriori", "oracle", "pipeline"};
    const std::vector<std::string> help = {"write trajectory and noise-model CSVs",
                                           "write the data QMI matrix N and the Slater report",
                                           "solve the generalized Gramian LMIs",
                                           "balance the generalized Gramians and reduce the data QMI",
                                           "write the center reduced-order model",
                                           "compute the a priori uniform error bound",
                                           "compute the a posteriori bound of the center model",
                                           "model-based baselines for the true system",
                                           "run all stages and write the full report"};
    for (size_t i = 0; i < names.size(); ++i) {
        CLI::App* sub = app.add_subcommand(names[i], help[i]);
        sub->add_option("--config", f.config, "experiment config (JSON)")->check(CLI::ExistingFile);
        sub->add_option("--out", f.out, "output directory");
        sub->add_option("--seed", f.seed, "RNG seed (overrides config)");
        sub->add_option("--sigma", f.sigma, "noise level (overrides config)");
        sub->add_option("--order", f.order, "reduced order r (overrides config)");
        if (names[i] == "pipeline") sub->add_option("--sweep", f.sweep, "run several noise levels: sigma=a,b,c");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfig;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return runCommand(cmd, f);
    } catch (const InvalidConfig& e) {
        printError(cmd, "invalid_config", e.what());
        return kConfig;
    } catch (const PreconditionFailure& e) {
        printError(cmd, "precondition_failure", e.what());
        return kPrecondition;
    } catch (const MultiplicitySplit& e) {
        printError(cmd, "precondition_failure", e.what());
        return kPrecondition;
    } catch (const Infeasible& e) {
        printError(cmd, "infeasible", e.what());
        return kInfeasible;
    } catch (const std::exception& e) {
        printError(cmd, "internal_error", e.what());
        return kInternal;
    }
}
