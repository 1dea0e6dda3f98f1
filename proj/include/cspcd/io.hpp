#ifndef CSPCD_IO_HPP
#define CSPCD_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "cspcd/inference.hpp"
#include "cspcd/moments.hpp"
#include "cspcd/montecarlo.hpp"
#include "cspcd/oracle.hpp"

namespace cspcd {

/// Read a point file: one float per line, '#' starts a comment, blank lines
/// ignored. Throws std::runtime_error on unreadable files or bad tokens.
std::vector<double> read_point_file(const std::string& path);

std::string kind_name(CellKind kind);
CellKind kind_from_name(const std::string& name);

void to_json(nlohmann::json& j, const MomentPair& m);
void from_json(const nlohmann::json& j, MomentPair& m);

void to_json(nlohmann::json& j, const MixtureMoments& m);
void from_json(const nlohmann::json& j, MixtureMoments& m);

void to_json(nlohmann::json& j, const CaseProbabilities& cp);
void from_json(const nlohmann::json& j, CaseProbabilities& cp);

void to_json(nlohmann::json& j, const MCReport& r);
void from_json(const nlohmann::json& j, MCReport& r);

void to_json(nlohmann::json& j, const TestResult& r);
void from_json(const nlohmann::json& j, TestResult& r);

void to_json(nlohmann::json& j, const OptimalParams& p);
void from_json(const nlohmann::json& j, OptimalParams& p);

} // namespace cspcd

#endif
