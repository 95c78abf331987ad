#include "ddbt/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <type_traits>

#include "ddbt/errors.hpp"

namespace ddbt::io {

namespace fs = std::filesystem;

// Shortest representation that round-trips exactly.
std::string formatDouble(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void writeCsv(const fs::path& path, const Matrix& M) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    for (Index i = 0; i < M.rows(); ++i) {
        for (Index j = 0; j < M.cols(); ++j) {
            if (j) out << ',';
            out << formatDouble(M(i, j));
        }
        out << '\n';
    }
}

Matrix readCsv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidConfig("cannot read matrix file " + path.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                size_t used = 0;
                row.push_back(std::stod(cell, &used));
                if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw InvalidConfig("malformed number '" + cell + "' in " + path.string());
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw InvalidConfig("ragged rows in " + path.string());
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InvalidConfig("empty matrix file " + path.string());
    Matrix M(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (Index i = 0; i < M.rows(); ++i)
        for (Index j = 0; j < M.cols(); ++j) M(i, j) = rows[i][j];
    return M;
}

Json toJson(const Matrix& M) {
    Json rows = Json::array();
    for (Index i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json toJson(const Vector& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Matrix matrixFromJson(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw InvalidConfig("expected a matrix (array of rows)");
    Matrix M(static_cast<Index>(j.size()), static_cast<Index>(j[0].size()));
    for (Index i = 0; i < M.rows(); ++i) {
        if (!j[i].is_array() || static_cast<Index>(j[i].size()) != M.cols())
            throw InvalidConfig("ragged matrix");
        for (Index c = 0; c < M.cols(); ++c) M(i, c) = j[i][c].get<double>();
    }
    return M;
}

void writeJson(const fs::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

Json readJson(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidConfig("cannot read " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidConfig(std::string("malformed JSON: ") + e.what());
    }
}

namespace {

void allowOnly(const Json& j, std::initializer_list<const char*> keys, const char* where) {
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* key : keys) ok = ok || k == key;
        if (!ok) throw InvalidConfig(std::string("unknown key '") + k + "' in " + where);
    }
}

template <class T>
T field(const Json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception&) {
        throw InvalidConfig(std::string("field '") + key + "' has the wrong type");
    }
}

// Integer-valued field; rejects fractional, negative (when unsigned) and non-numeric values.
template <class T>
T integerField(const Json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    const Json& v = j.at(key);
    const bool ok = std::is_unsigned_v<T> ? v.is_number_unsigned() : v.is_number_integer();
    if (!ok) throw InvalidConfig(std::string("field '") + key + "' must be " +
                                 (std::is_unsigned_v<T> ? "a non-negative integer" : "an integer"));
    return v.get<T>();
}

fs::path resolve(const fs::path& base, const std::string& p) {
    const fs::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}

}  // namespace

ExperimentConfig parseConfig(const Json& j, const fs::path& baseDir) {
    if (!j.is_object()) throw InvalidConfig("config must be a JSON object");
    allowOnly(j, {"system", "L", "input", "noise", "seed", "order_r"}, "config");
    ExperimentConfig cfg;
    if (j.contains("system")) {
        const Json& s = j["system"];
        if (s.is_string()) {
            cfg.system = s.get<std::string>();
        } else if (s.is_object()) {
            allowOnly(s, {"A", "B", "C", "D"}, "system");
            for (const char* k : {"A", "B", "C", "D"})
                if (!s.contains(k) || !s[k].is_string()) throw InvalidConfig(std::string("system.") + k + " must be a path");
            cfg.system = "files";
            cfg.pathA = resolve(baseDir, s["A"].get<std::string>()).string();
            cfg.pathB = resolve(baseDir, s["B"].get<std::string>()).string();
            cfg.pathC = resolve(baseDir, s["C"].get<std::string>()).string();
            cfg.pathD = resolve(baseDir, s["D"].get<std::string>()).string();
        } else {
            throw InvalidConfig("system must be a builtin name or an object of paths");
        }
    }
    const long long L = integerField<long long>(j, "L", cfg.L);
    if (L <= 0) throw InvalidConfig("L must be positive");
    cfg.L = static_cast<Index>(L);
    if (j.contains("input")) {
        const Json& in = j["input"];
        if (!in.is_object()) throw InvalidConfig("input must be an object");
        allowOnly(in, {"type", "path"}, "input");
        cfg.inputType = field<std::string>(in, "type", cfg.inputType);
        if (cfg.inputType != "paper" && cfg.inputType != "file")
            throw InvalidConfig("input.type must be 'paper' or 'file'");
        if (cfg.inputType == "file") {
            if (!in.contains("path")) throw InvalidConfig("input.path is required for file input");
            cfg.inputPath = resolve(baseDir, field<std::string>(in, "path", "")).string();
        }
    }
    if (j.contains("noise")) {
        const Json& nz = j["noise"];
        if (!nz.is_object()) throw InvalidConfig("noise must be an object");
        allowOnly(nz, {"sigma", "phi_scale", "sigma_floor", "normalization", "max_redraws"}, "noise");
        cfg.sigma = field<double>(nz, "sigma", cfg.sigma);
        cfg.phiScale = field<double>(nz, "phi_scale", cfg.phiScale);
        cfg.sigmaFloor = field<double>(nz, "sigma_floor", cfg.sigmaFloor);
        cfg.maxRedraws = integerField<int>(nz, "max_redraws", cfg.maxRedraws);
        const std::string norm = field<std::string>(nz, "normalization", "energy");
        if (norm == "energy")
            cfg.normalization = NoiseNormalization::Energy;
        else if (norm == "per_sample")
            cfg.normalization = NoiseNormalization::PerSample;
        else
            throw InvalidConfig("noise.normalization must be 'energy' or 'per_sample'");
    }
    if (!(cfg.sigma >= 0)) throw InvalidConfig("noise.sigma must be non-negative");
    if (!(cfg.phiScale > 0)) throw InvalidConfig("noise.phi_scale must be positive");
    if (!(cfg.sigmaFloor > 0)) throw InvalidConfig("noise.sigma_floor must be positive");
    if (cfg.maxRedraws < 0) throw InvalidConfig("noise.max_redraws must be non-negative");
    cfg.seed = integerField<std::uint64_t>(j, "seed", cfg.seed);
    const long long r = integerField<long long>(j, "order_r", cfg.orderR);
    if (r <= 0) throw InvalidConfig("order_r must be positive");
    cfg.orderR = static_cast<Index>(r);
    return cfg;
}

ExperimentConfig loadConfig(const fs::path& path) {
    return parseConfig(readJson(path), path.parent_path());
}

Json toJson(const ExperimentConfig& cfg) {
    Json j;
    if (cfg.system == "files")
        j["system"] = {{"A", cfg.pathA}, {"B", cfg.pathB}, {"C", cfg.pathC}, {"D", cfg.pathD}};
    else
        j["system"] = cfg.system;
    j["L"] = cfg.L;
    j["input"] = {{"type", cfg.inputType}};
    if (cfg.inputType == "file") j["input"]["path"] = cfg.inputPath;
    j["noise"] = {{"sigma", cfg.sigma},
                  {"phi_scale", cfg.phiScale},
                  {"sigma_floor", cfg.sigmaFloor},
                  {"normalization", cfg.normalization == NoiseNormalization::Energy ? "energy" : "per_sample"},
                  {"max_redraws", cfg.maxRedraws}};
    j["seed"] = cfg.seed;
    j["order_r"] = cfg.orderR;
    return j;
}

}  // namespace ddbt::io
