#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ddbt/experiment.hpp"
#include "ddbt/linalg.hpp"

namespace ddbt::io {

using Json = nlohmann::ordered_json;

// Row-major CSV without header, entries formatted with %.17g.
void writeCsv(const std::filesystem::path& path, const Matrix& M);
Matrix readCsv(const std::filesystem::path& path);
std::string formatDouble(double v);

Json toJson(const Matrix& M);  // array of rows
Json toJson(const Vector& v);
Matrix matrixFromJson(const Json& j);

void writeJson(const std::filesystem::path& path, const Json& j);
Json readJson(const std::filesystem::path& path);

// Parses and schema-checks an experiment config; relative file paths are
// resolved against baseDir. Throws InvalidConfig.
ExperimentConfig parseConfig(const Json& j, const std::filesystem::path& baseDir = {});
ExperimentConfig loadConfig(const std::filesystem::path& path);
Json toJson(const ExperimentConfig& cfg);

}  // namespace ddbt::io
