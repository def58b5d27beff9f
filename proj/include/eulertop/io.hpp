#pragma once

// File formats. CSV columns are fixed per experiment kind; floating-point
// cells use scientific notation with 12 significant digits (which round-trips
// through parse/re-emit bit-identically), counters are plain integers.

#include <string>
#include <vector>

#include <json.hpp>

#include "eulertop/correspondence.hpp"
#include "eulertop/dynamics.hpp"
#include "eulertop/ensemble.hpp"
#include "eulertop/floquet.hpp"
#include "eulertop/spin.hpp"
#include "eulertop/stationary.hpp"

namespace eulertop {

using json = nlohmann::json;

namespace csv {

std::string sci(double v);  // "%.11e": 12 significant digits

// header: t,j1,j2,j3,e_body,j_sq
std::string trajectory(const Trajectory& t);
// header: t,var_major,var_minor,tilt_rad
std::string ensemble(const EnsembleResult& r);
// header: omega_mag,point_id,j1,j2,j3,energy,stability  (omega_mag = |Omega|/J)
std::string phase(const PhaseDiagram& d);
std::string stationary(double omega_over_j, const StationaryAnalysis& a);
// header: omega_mag,level_index,energy
std::string spectrum(const std::vector<double>& omega_over_j_grid,
                     const std::vector<Spectrum>& spectra);
// header: period_index,j1,j2,j3
std::string strobo(const StroboscopicRecord& r);
// header: t,j1,j2,j3,e_body,j_sq,shape
std::string floquet_trajectory(const std::vector<FloquetSample>& samples);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> cells;
};

// Strict parser for the schemas above (fixed column counts, no quoting).
Table parse(const std::string& text);

// Re-emits a parsed table, re-formatting every cell according to its column
// name. parse -> reemit is byte-identical for files this library wrote.
std::string reemit(const Table& t);

}  // namespace csv

json to_json(const InertiaConfig& cfg);
json to_json(const TwistingConfig& cfg);
InertiaConfig inertia_from_json(const json& j);
TwistingConfig twisting_from_json(const json& j);
json to_json(const BodyState& s);
BodyState body_state_from_json(const json& j);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace eulertop
