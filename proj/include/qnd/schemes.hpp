#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "qnd/symplectic.hpp"

namespace qnd {

/// Gain of the reference quadrature-coupling interaction (the product of
/// interaction strength and interaction time).
struct IdealQndParams {
  double gain = 0.0;
};

/// The measurement topologies provided by this library.  The names are
/// the stable identifiers used by the CLI and the config format.
enum class SchemeName { ideal, fig1_dopa, fig3_nopa, fig4_amplified };

std::string_view to_string(SchemeName name);
std::optional<SchemeName> scheme_from_string(std::string_view text);
const std::array<SchemeName, 4>& all_schemes();

/// Beamsplitter coefficients produced by a scheme's tuning, plus the
/// amplification factor (1 except for fig4_amplified).  R^2 + T^2 = 1
/// holds for every tuning.
struct TunedParameters {
  double reflectivity = 0.0;
  double transmissivity = 1.0;
  double amplification = 1.0;
};

/// A scheme instance: which topology, at which squeezing factor (the
/// gain for `ideal`), acting on which two-mode register, and which mode
/// is the probe versus the signal.
struct SchemeDescriptor {
  SchemeName name = SchemeName::fig3_nopa;
  double r = 0.0;
  ModeRegister reg;
  std::string probe;
  std::string signal;
};

/// A constructed scheme.  The transform is expressed in register order
/// with outputs in the uniform (probe, signal) port convention; for
/// fig1_dopa this includes the physical output-port swap, recorded in
/// port_map (quadrature row i of the matrix reads physical output port
/// port_map[i]).
struct BuiltScheme {
  SymplecticTransform transform;
  TunedParameters tuned;
  std::array<int, 4> port_map{0, 1, 2, 3};
};

/// Reference back-action-evading transform: the probe cosine picks up
/// gain * (signal cosine), the signal cosine is untouched, and the whole
/// back-action lands on the signal sine.
SymplecticTransform ideal_qnd_transform(const IdealQndParams& params,
                                        const ModeRegister& reg,
                                        std::string_view probe,
                                        std::string_view signal);

/// Two single-mode squeezers with opposite signs between two reflective
/// beamsplitters, tuned so the probe reads the signal cosine with gain
/// 2 sinh r.  The physical outputs emerge on swapped ports; the returned
/// matrix has the swap already applied.  Requires |r| <= 300.
BuiltScheme build_fig1(double r, const ModeRegister& reg,
                       std::string_view probe, std::string_view signal);

/// A single two-mode squeezer between two reflective beamsplitters,
/// tuned (R = sqrt((cosh r - 1)/(2 cosh r)), T = sqrt((cosh r + 1)/
/// (2 cosh r))) to the same gain-2sinh(r) back-action-evading form with
/// no port swap.  Requires |r| <= 300.  Negative r is accepted; the
/// positive-root tuning then yields the conjugate-quadrature variant of
/// the measurement.
BuiltScheme build_fig3(double r, const ModeRegister& reg,
                       std::string_view probe, std::string_view signal);

/// A single beamsplitter followed by the two-mode squeezer, tuned
/// (R = -cosh r / A, T = sinh r / A, A = sqrt(cosh 2r)) so the measured
/// signal cosine is amplified by A while still evading back-action.
/// Requires |r| <= 150 since A squares the exponent range.
BuiltScheme build_fig4(double r, const ModeRegister& reg,
                       std::string_view probe, std::string_view signal);

/// Dispatch on descriptor.name; `ideal` uses descriptor.r as the gain.
BuiltScheme build_scheme(const SchemeDescriptor& descriptor);

}  // namespace qnd
