#include "eventlens/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace eventlens {

StrengthBand classify(double r) {
  if (!(r >= -1.0 && r <= 1.0))
    throw std::invalid_argument("classify: coefficient outside [-1, 1]");

  const double a = std::fabs(r);
  Band band = Band::Negligible;
  if (a >= kStrongThreshold)
    band = Band::Strong;
  else if (a >= kModerateThreshold)
    band = Band::Moderate;
  else if (a > kNegligibleThreshold)
    band = Band::Weak;

  const Sign sign = r > 0 ? Sign::Positive : (r < 0 ? Sign::Negative : Sign::None);
  const Color color =
      r > kModerateThreshold ? Color::Green : (r < -kModerateThreshold ? Color::Red : Color::Orange);
  return {band, sign, color};
}

std::string_view to_string(Band b) {
  switch (b) {
    case Band::Negligible: return "Negligible";
    case Band::Weak: return "Weak";
    case Band::Moderate: return "Moderate";
    case Band::Strong: return "Strong";
  }
  return "?";
}

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Positive: return "Positive";
    case Sign::Negative: return "Negative";
    case Sign::None: return "None";
  }
  return "?";
}

std::string_view to_string(Color c) {
  switch (c) {
    case Color::Green: return "Green";
    case Color::Orange: return "Orange";
    case Color::Red: return "Red";
  }
  return "?";
}

std::string label(const StrengthBand& s) {
  std::string out(to_string(s.band));
  if (s.sign != Sign::None) {
    out += ' ';
    out += to_string(s.sign);
  }
  return out;
}

std::string_view color_token(Color c) {
  switch (c) {
    case Color::Green: return "[G]";
    case Color::Orange: return "[O]";
    case Color::Red: return "[R]";
  }
  return "[?]";
}

}  // namespace eventlens
