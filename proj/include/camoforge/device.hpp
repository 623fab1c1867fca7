#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace camoforge {

/// Device-level operating point for the threshold-dependent cell model.
/// Volts, kelvin and nanometers throughout. The vth defaults are
/// placeholders for a 22nm-class dual-Vth process (foundry numbers are
/// not public); node_x_high/low are the measured internal logic levels
/// the skewed inverter must separate at nominal conditions.
struct DeviceParams {
  double vdd = 1.0;
  double vth_low = 0.25;
  double vth_high = 0.50;
  double delta_vth = 0.09;        // absolute 3-sigma threshold spread
  double vth_process_pct = 0.15;  // relative +-15% process shift
  double temp_min_k = 273.0;
  double temp_max_k = 373.0;
  double vdd_min = 0.85;
  double vdd_max = 1.15;
  double temp_coeff = 0.0008;        // V/K threshold roll-off
  double subthreshold_offset = 0.05; // per-stage leakage boost, V
  double node_x_high = 0.45;         // internal logic-1 level (low-Vth cell)
  double node_x_low = 0.11;          // internal logic-0 level (high-Vth cell)
};

/// INV1 sizing: NMOS width is swept, PMOS width is fixed.
struct InverterGeometry {
  double wn_nm = 80.0;
  double wp_nm = 25.0;
  double kn_over_kp_per_width = 2.0; // process transconductance ratio

  double beta_ratio() const { return wn_nm / wp_nm; }
};

enum class CellFlavor { Low, High };

/// Validates invariants (0 < vth_low < vth_high < vdd, node_x_low <
/// node_x_high, non-empty ranges, positive geometry). ConfigError on
/// violation.
void validate(const DeviceParams& params);
void validate(const InverterGeometry& geom);

/// Voltage after each stage of an n-transistor pass-gate cascade,
/// assuming ideal devices: stage i sits at max(0, vdd - i*vth).
std::vector<double> cascade_ideal(const DeviceParams& params, std::size_t n, CellFlavor flavor);

/// Same cascade with the first-order subthreshold correction: each
/// stage drops by (vth - offset) instead of vth, so every level is at
/// or above the ideal one and the sequence stays non-increasing while
/// offset < vth. ConfigError when offset >= vth.
std::vector<double> cascade_corrected(const DeviceParams& params, std::size_t n,
                                      CellFlavor flavor);

/// Switching threshold of the skewed INV1, long-channel square law with
/// both devices saturated: Vm = (Vtn + r*(Vdd - |Vtp|)) / (1 + r),
/// r = sqrt(strength_p / strength_n), strength = width * k'. The public
/// form models the low-Vth reference inverter; corners use the
/// flavor-adjusted overload.
double inverter_trip_point(const DeviceParams& params, const InverterGeometry& geom);
double inverter_trip_point(double vdd, double vtn, double vtp_abs, double r);

struct RobustnessVerdict {
  bool ok = false;
  double slow_low_corner = 0.0;  // vth_low + delta_vth
  double fast_high_corner = 0.0; // vth_high - delta_vth
};

/// The separability condition: the low-Vth slow corner must stay below
/// the high-Vth fast corner, (vth_low + delta) < (vth_high - delta).
RobustnessVerdict robustness_condition(const DeviceParams& params);

struct Corner {
  double vdd = 1.0;
  double temp_k = 300.0;
  int vth_shift_sign = 0; // -1, 0, +1
};

/// {min, nominal, max} supply x {min, nominal, max} temperature x
/// {-1, 0, +1} threshold shift = 27 corners, containing the nine
/// process/temperature corners at nominal supply.
std::vector<Corner> make_default_corner_grid(const DeviceParams& params);

enum class ShiftConvention { RelativePct, AbsoluteDelta };

/// Threshold at a corner: nominal shifted by the process term (relative
/// +-pct*vth or absolute +-delta) and by temp_coeff*(T - 300K).
double vth_at_corner(const DeviceParams& params, double vth_nominal, const Corner& corner,
                     ShiftConvention convention);

struct SweepRow {
  double wn_nm = 0.0;
  Corner corner;
  double vm_low = 0.0;   // trip point, low-Vth cell
  double vm_high = 0.0;  // trip point, high-Vth cell
  double x_logic1 = 0.0; // node-X level, low-Vth cell (two-stage cascade)
  double x_logic0 = 0.0; // node-X level, high-Vth cell
  bool feasible = false;
};

struct WidthFeasibility {
  double wn_nm = 0.0;
  bool feasible = false;
};

struct SweepResult {
  bool eq1_ok = false;
  ShiftConvention convention = ShiftConvention::RelativePct;
  std::vector<SweepRow> rows;
  std::vector<WidthFeasibility> widths;
  std::optional<std::pair<double, double>> feasible_interval; // [wn_lo, wn_hi]
};

/// Sweeps the INV1 NMOS width over [wn_min, wn_max] in `step`
/// increments and checks every corner: a width is feasible iff, with
/// corner-adjusted thresholds, each flavor's trip point falls on the
/// correct side of its two-stage node-X level (high-Vth level below
/// Vm_high, Vm_low below low-Vth level). Node levels are derived at
/// nominal supply from the corner-adjusted vth; the separability
/// condition gates everything (when it fails no width is feasible).
/// Reports the maximal contiguous feasible width interval.
SweepResult corner_sweep(const DeviceParams& params, const InverterGeometry& geom, double wn_min,
                         double wn_max, double step,
                         ShiftConvention convention = ShiftConvention::RelativePct);

/// Device file round-trip, schema "camoforge-device-v1".
std::string device_to_json(const DeviceParams& params, const InverterGeometry& geom);
std::pair<DeviceParams, InverterGeometry> device_from_json(const std::string& text);

} // namespace camoforge
