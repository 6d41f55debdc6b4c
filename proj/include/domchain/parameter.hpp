#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace domchain {

// The chain parameters and their variants, in report column order.
enum class Param { kIr, kGamma, kI, kAlpha, kUpperGamma, kIR, kOIR, kIS, kIRS };

inline constexpr std::array<Param, 9> kAllParams = {
    Param::kIr,         Param::kGamma, Param::kI,   Param::kAlpha, Param::kUpperGamma,
    Param::kIR,         Param::kOIR,   Param::kIS,  Param::kIRS};

// Report key: ir, gamma, i, alpha, Gamma, IR, OIR, IS, IRS.
constexpr std::string_view param_name(Param p) {
  switch (p) {
    case Param::kIr: return "ir";
    case Param::kGamma: return "gamma";
    case Param::kI: return "i";
    case Param::kAlpha: return "alpha";
    case Param::kUpperGamma: return "Gamma";
    case Param::kIR: return "IR";
    case Param::kOIR: return "OIR";
    case Param::kIS: return "IS";
    case Param::kIRS: return "IRS";
  }
  return "?";
}

// Names are case-sensitive ("gamma" and "Gamma" differ).
constexpr std::optional<Param> parse_param(std::string_view name) {
  for (Param p : kAllParams) {
    if (param_name(p) == name) return p;
  }
  return std::nullopt;
}

constexpr int param_index(Param p) { return static_cast<int>(p); }

}  // namespace domchain
