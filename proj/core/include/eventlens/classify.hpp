#pragma once

#include <string>
#include <string_view>

namespace eventlens {

enum class Band { Negligible, Weak, Moderate, Strong };
enum class Sign { Positive, Negative, None };
enum class Color { Green, Orange, Red };

struct StrengthBand {
  Band band;
  Sign sign;
  Color color;

  friend bool operator==(const StrengthBand&, const StrengthBand&) = default;
};

// |r| in [0.6, 1] Strong, [0.3, 0.6) Moderate, (0.1, 0.3) Weak, [0, 0.1]
// Negligible. Color: r > 0.3 Green, r < -0.3 Red, otherwise Orange.
inline constexpr double kStrongThreshold = 0.6;
inline constexpr double kModerateThreshold = 0.3;
inline constexpr double kNegligibleThreshold = 0.1;

/// Throws std::invalid_argument for NaN or values outside [-1, 1].
StrengthBand classify(double r);

std::string_view to_string(Band b);
std::string_view to_string(Sign s);
std::string_view to_string(Color c);

/// "Strong Positive", "Negligible" (sign None), ...
std::string label(const StrengthBand& s);

/// "[G]", "[O]", "[R]".
std::string_view color_token(Color c);

}  // namespace eventlens
