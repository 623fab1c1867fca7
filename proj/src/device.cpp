#include "camoforge/device.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "camoforge/errors.hpp"

namespace camoforge {

namespace {

double flavor_vth(const DeviceParams& params, CellFlavor flavor) {
  return flavor == CellFlavor::Low ? params.vth_low : params.vth_high;
}

/// Stage level of the corrected cascade at explicit operating values.
double corrected_stage(double vdd, double vth, double offset, std::size_t stage) {
  return std::max(0.0, vdd - static_cast<double>(stage) * (vth - offset));
}

/// The camouflaged cell discriminates through a two-transistor cascade,
/// so node X sits at the second stage level.
constexpr std::size_t kNodeXStage = 2;

} // namespace

void validate(const DeviceParams& params) {
  if (!(params.vth_low > 0.0 && params.vth_low < params.vth_high && params.vth_high < params.vdd))
    throw ConfigError("device params need 0 < vth_low < vth_high < vdd");
  if (!(params.node_x_low < params.node_x_high))
    throw ConfigError("device params need node_x_low < node_x_high");
  if (!(params.temp_min_k <= params.temp_max_k))
    throw ConfigError("temperature range is empty");
  if (!(params.vdd_min <= params.vdd_max))
    throw ConfigError("vdd range is empty");
  if (params.delta_vth < 0.0 || params.vth_process_pct < 0.0 || params.subthreshold_offset < 0.0)
    throw ConfigError("spreads and the subthreshold offset must be non-negative");
}

void validate(const InverterGeometry& geom) {
  if (!(geom.wn_nm > 0.0 && geom.wp_nm > 0.0))
    throw ConfigError("inverter widths must be positive");
  if (!(geom.kn_over_kp_per_width > 0.0))
    throw ConfigError("kn/kp ratio must be positive");
}

std::vector<double> cascade_ideal(const DeviceParams& params, std::size_t n, CellFlavor flavor) {
  if (n < 1) throw ConfigError("cascade needs at least one stage");
  const double vth = flavor_vth(params, flavor);
  std::vector<double> stages(n);
  for (std::size_t i = 1; i <= n; ++i)
    stages[i - 1] = std::max(0.0, params.vdd - static_cast<double>(i) * vth);
  return stages;
}

std::vector<double> cascade_corrected(const DeviceParams& params, std::size_t n,
                                      CellFlavor flavor) {
  if (n < 1) throw ConfigError("cascade needs at least one stage");
  const double vth = flavor_vth(params, flavor);
  if (params.subthreshold_offset >= vth)
    throw ConfigError("subthreshold offset " + std::to_string(params.subthreshold_offset) +
                      " must stay below vth " + std::to_string(vth) +
                      " (the corrected cascade would stop being monotone)");
  std::vector<double> stages(n);
  for (std::size_t i = 1; i <= n; ++i)
    stages[i - 1] = corrected_stage(params.vdd, vth, params.subthreshold_offset, i);
  return stages;
}

double inverter_trip_point(double vdd, double vtn, double vtp_abs, double r) {
  return (vtn + r * (vdd - vtp_abs)) / (1.0 + r);
}

double inverter_trip_point(const DeviceParams& params, const InverterGeometry& geom) {
  validate(params);
  validate(geom);
  const double r =
      std::sqrt(geom.wp_nm / (geom.wn_nm * geom.kn_over_kp_per_width));
  return inverter_trip_point(params.vdd, params.vth_low, params.vth_low, r);
}

RobustnessVerdict robustness_condition(const DeviceParams& params) {
  RobustnessVerdict verdict;
  verdict.slow_low_corner = params.vth_low + params.delta_vth;
  verdict.fast_high_corner = params.vth_high - params.delta_vth;
  verdict.ok = verdict.slow_low_corner < verdict.fast_high_corner;
  return verdict;
}

std::vector<Corner> make_default_corner_grid(const DeviceParams& params) {
  const double vdds[3] = {params.vdd_min, params.vdd, params.vdd_max};
  const double temps[3] = {params.temp_min_k, 300.0, params.temp_max_k};
  const int shifts[3] = {-1, 0, 1};
  std::vector<Corner> corners;
  corners.reserve(27);
  for (double vdd : vdds)
    for (double temp : temps)
      for (int shift : shifts) corners.push_back({vdd, temp, shift});
  return corners;
}

double vth_at_corner(const DeviceParams& params, double vth_nominal, const Corner& corner,
                     ShiftConvention convention) {
  const double process_term = convention == ShiftConvention::RelativePct
                                  ? vth_nominal * params.vth_process_pct
                                  : params.delta_vth;
  return vth_nominal + corner.vth_shift_sign * process_term -
         params.temp_coeff * (corner.temp_k - 300.0);
}

SweepResult corner_sweep(const DeviceParams& params, const InverterGeometry& geom, double wn_min,
                         double wn_max, double step, ShiftConvention convention) {
  validate(params);
  validate(geom);
  if (!(wn_min > 0.0 && wn_min <= wn_max && step > 0.0))
    throw ConfigError("sweep needs 0 < wn_min <= wn_max and a positive step");

  SweepResult result;
  result.convention = convention;
  result.eq1_ok = robustness_condition(params).ok;
  const auto corners = make_default_corner_grid(params);

  const auto n_steps =
      static_cast<std::size_t>(std::floor((wn_max - wn_min) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < n_steps; ++i) {
    const double wn = wn_min + static_cast<double>(i) * step;
    const double r = std::sqrt(geom.wp_nm / (wn * geom.kn_over_kp_per_width));
    bool all_corners_ok = result.eq1_ok;
    for (const Corner& corner : corners) {
      SweepRow row;
      row.wn_nm = wn;
      row.corner = corner;
      const double vtl = vth_at_corner(params, params.vth_low, corner, convention);
      const double vth = vth_at_corner(params, params.vth_high, corner, convention);
      // Node levels move with threshold, not supply: the cascade sits
      // behind the cell's internal precharge, referenced to nominal vdd.
      const bool corner_valid = vtl > params.subthreshold_offset && vth > vtl;
      if (corner_valid) {
        row.x_logic1 = corrected_stage(params.vdd, vtl, params.subthreshold_offset, kNodeXStage);
        row.x_logic0 = corrected_stage(params.vdd, vth, params.subthreshold_offset, kNodeXStage);
        row.vm_low = inverter_trip_point(corner.vdd, vtl, vtl, r);
        row.vm_high = inverter_trip_point(corner.vdd, vth, vth, r);
        row.feasible = result.eq1_ok && row.vm_low < row.x_logic1 && row.vm_high > row.x_logic0;
      } else {
        row.feasible = false; // threshold collapsed at this corner
      }
      all_corners_ok = all_corners_ok && row.feasible;
      result.rows.push_back(row);
    }
    result.widths.push_back({wn, all_corners_ok});
  }

  // Maximal contiguous feasible run (first of the longest on ties).
  std::size_t best_start = 0, best_len = 0, run_start = 0, run_len = 0;
  for (std::size_t i = 0; i < result.widths.size(); ++i) {
    if (result.widths[i].feasible) {
      if (run_len == 0) run_start = i;
      ++run_len;
      if (run_len > best_len) {
        best_len = run_len;
        best_start = run_start;
      }
    } else {
      run_len = 0;
    }
  }
  if (best_len > 0)
    result.feasible_interval = {result.widths[best_start].wn_nm,
                                result.widths[best_start + best_len - 1].wn_nm};
  return result;
}

namespace {
constexpr const char* kDeviceSchema = "camoforge-device-v1";
}

std::string device_to_json(const DeviceParams& params, const InverterGeometry& geom) {
  nlohmann::ordered_json doc;
  doc["schema"] = kDeviceSchema;
  doc["vdd"] = params.vdd;
  doc["vth_low"] = params.vth_low;
  doc["vth_high"] = params.vth_high;
  doc["delta_vth"] = params.delta_vth;
  doc["vth_process_pct"] = params.vth_process_pct;
  doc["temp_range_k"] = {params.temp_min_k, params.temp_max_k};
  doc["vdd_range"] = {params.vdd_min, params.vdd_max};
  doc["temp_coeff_v_per_k"] = params.temp_coeff;
  doc["subthreshold_offset"] = params.subthreshold_offset;
  doc["node_x_high"] = params.node_x_high;
  doc["node_x_low"] = params.node_x_low;
  doc["inverter"] = {{"wn_nm", geom.wn_nm},
                     {"wp_nm", geom.wp_nm},
                     {"kn_over_kp_per_width", geom.kn_over_kp_per_width}};
  return doc.dump(2) + "\n";
}

std::pair<DeviceParams, InverterGeometry> device_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema").get<std::string>() != kDeviceSchema)
      throw ParseError("unsupported device schema");
    DeviceParams params;
    params.vdd = doc.at("vdd").get<double>();
    params.vth_low = doc.at("vth_low").get<double>();
    params.vth_high = doc.at("vth_high").get<double>();
    params.delta_vth = doc.at("delta_vth").get<double>();
    params.vth_process_pct = doc.at("vth_process_pct").get<double>();
    params.temp_min_k = doc.at("temp_range_k").at(0).get<double>();
    params.temp_max_k = doc.at("temp_range_k").at(1).get<double>();
    params.vdd_min = doc.at("vdd_range").at(0).get<double>();
    params.vdd_max = doc.at("vdd_range").at(1).get<double>();
    params.temp_coeff = doc.at("temp_coeff_v_per_k").get<double>();
    params.subthreshold_offset = doc.at("subthreshold_offset").get<double>();
    params.node_x_high = doc.at("node_x_high").get<double>();
    params.node_x_low = doc.at("node_x_low").get<double>();
    InverterGeometry geom;
    geom.wn_nm = doc.at("inverter").at("wn_nm").get<double>();
    geom.wp_nm = doc.at("inverter").at("wp_nm").get<double>();
    geom.kn_over_kp_per_width = doc.at("inverter").at("kn_over_kp_per_width").get<double>();
    validate(params);
    validate(geom);
    return {params, geom};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed device document: ") + e.what());
  }
}

} // namespace camoforge
