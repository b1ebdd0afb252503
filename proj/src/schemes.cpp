#include "qnd/schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace qnd {
namespace {

constexpr std::array<SchemeName, 4> scheme_list{
    SchemeName::ideal, SchemeName::fig1_dopa, SchemeName::fig3_nopa,
    SchemeName::fig4_amplified};

void require_two_modes(const ModeRegister& reg, std::string_view probe,
                       std::string_view signal) {
  if (reg.n_modes() != 2) {
    throw std::invalid_argument("measurement schemes require a two-mode register");
  }
  if (reg.index_of(probe) == reg.index_of(signal)) {
    throw std::invalid_argument("probe and signal must be distinct modes");
  }
}

void require_squeezing_limit(double r, double limit) {
  if (!std::isfinite(r) || std::abs(r) > limit) {
    throw std::domain_error("scheme squeezing factor out of range");
  }
}

// The permutation exchanging the two modes' quadrature rows.
constexpr std::array<int, 4> swapped_ports{1, 0, 3, 2};

}  // namespace

std::string_view to_string(SchemeName name) {
  switch (name) {
    case SchemeName::ideal:
      return "ideal";
    case SchemeName::fig1_dopa:
      return "fig1_dopa";
    case SchemeName::fig3_nopa:
      return "fig3_nopa";
    case SchemeName::fig4_amplified:
      return "fig4_amplified";
  }
  return "unknown";
}

std::optional<SchemeName> scheme_from_string(std::string_view text) {
  for (SchemeName name : scheme_list) {
    if (to_string(name) == text) {
      return name;
    }
  }
  return std::nullopt;
}

const std::array<SchemeName, 4>& all_schemes() { return scheme_list; }

SymplecticTransform ideal_qnd_transform(const IdealQndParams& params,
                                        const ModeRegister& reg,
                                        std::string_view probe,
                                        std::string_view signal) {
  require_two_modes(reg, probe, signal);
  if (!std::isfinite(params.gain)) {
    throw std::domain_error("gain must be finite");
  }
  const int pc = reg.cosine_index(probe);
  const int sc = reg.cosine_index(signal);
  const int ps = reg.sine_index(probe);
  const int ss = reg.sine_index(signal);
  Matrix m = Matrix::Identity(4, 4);
  m(pc, sc) = params.gain;
  m(ss, ps) = -params.gain;
  return {std::move(m), reg};
}

BuiltScheme build_fig1(double r, const ModeRegister& reg,
                       std::string_view probe, std::string_view signal) {
  require_two_modes(reg, probe, signal);
  require_squeezing_limit(r, 300.0);

  const double e2r = std::exp(2.0 * r);
  TunedParameters tuned;
  tuned.transmissivity = std::exp(r) / std::sqrt(1.0 + e2r);
  tuned.reflectivity = 1.0 / std::sqrt(1.0 + e2r);
  tuned.amplification = 1.0;

  const auto in_bs = beamsplitter(reg, probe, signal, tuned.reflectivity,
                                  tuned.transmissivity, BeamsplitterVariant::b1);
  const auto arm_plus = dopa(reg, probe, r);
  const auto arm_minus = dopa(reg, signal, -r);
  const auto out_bs = beamsplitter(reg, probe, signal, tuned.reflectivity,
                                   tuned.transmissivity, BeamsplitterVariant::b2);
  // The raw outputs emerge on exchanged ports; a mode swap restores the
  // uniform (probe, signal) row order.
  const auto swap = beamsplitter(reg, probe, signal, 0.0, 1.0,
                                 BeamsplitterVariant::b1);

  auto transform =
      compose(compose(compose(compose(in_bs, arm_plus), arm_minus), out_bs),
              swap);
  return {std::move(transform), tuned, swapped_ports};
}

BuiltScheme build_fig3(double r, const ModeRegister& reg,
                       std::string_view probe, std::string_view signal) {
  require_two_modes(reg, probe, signal);
  require_squeezing_limit(r, 300.0);

  const double ch = std::cosh(r);
  TunedParameters tuned;
  tuned.reflectivity = std::sqrt((ch - 1.0) / (2.0 * ch));
  tuned.transmissivity = std::sqrt((ch + 1.0) / (2.0 * ch));
  tuned.amplification = 1.0;

  const auto in_bs = beamsplitter(reg, probe, signal, tuned.reflectivity,
                                  tuned.transmissivity, BeamsplitterVariant::b1);
  const auto squeezer = nopa(reg, probe, signal, r);
  const auto out_bs = beamsplitter(reg, probe, signal, tuned.reflectivity,
                                   tuned.transmissivity, BeamsplitterVariant::b2);

  auto transform = compose(compose(in_bs, squeezer), out_bs);
  return {std::move(transform), tuned, {0, 1, 2, 3}};
}

BuiltScheme build_fig4(double r, const ModeRegister& reg,
                       std::string_view probe, std::string_view signal) {
  require_two_modes(reg, probe, signal);
  require_squeezing_limit(r, 150.0);

  const double amplification = std::sqrt(std::cosh(2.0 * r));
  TunedParameters tuned;
  tuned.reflectivity = -std::cosh(r) / amplification;
  tuned.transmissivity = std::sinh(r) / amplification;
  tuned.amplification = amplification;

  const auto in_bs = beamsplitter(reg, probe, signal, tuned.reflectivity,
                                  tuned.transmissivity, BeamsplitterVariant::b2);
  const auto squeezer = nopa(reg, probe, signal, r);

  auto transform = compose(in_bs, squeezer);
  return {std::move(transform), tuned, {0, 1, 2, 3}};
}

BuiltScheme build_scheme(const SchemeDescriptor& descriptor) {
  switch (descriptor.name) {
    case SchemeName::ideal: {
      auto transform = ideal_qnd_transform({descriptor.r}, descriptor.reg,
                                           descriptor.probe, descriptor.signal);
      return {std::move(transform), TunedParameters{}, {0, 1, 2, 3}};
    }
    case SchemeName::fig1_dopa:
      return build_fig1(descriptor.r, descriptor.reg, descriptor.probe,
                        descriptor.signal);
    case SchemeName::fig3_nopa:
      return build_fig3(descriptor.r, descriptor.reg, descriptor.probe,
                        descriptor.signal);
    case SchemeName::fig4_amplified:
      return build_fig4(descriptor.r, descriptor.reg, descriptor.probe,
                        descriptor.signal);
  }
  throw std::invalid_argument("unknown scheme");
}

}  // namespace qnd
