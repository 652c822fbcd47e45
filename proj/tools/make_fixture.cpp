// Writes the bundled synthetic five-company data set:
//   <dir>/prices/<TICKER>.csv   finance-portal export (trading days only)
//   <dir>/trends/<TICKER>.csv   Date,Score,Scale (every calendar day)
//   <dir>/config.json
//
// Numbers come from a fixed-seed mt19937_64 with hand-rolled uniform and
// normal transforms, so output does not depend on the standard library's
// distribution implementations.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eventlens/date.hpp"
#include "eventlens/snapshot.hpp"

namespace {

using eventlens::Date;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
  double normal() {
    const double u1 = std::max(uniform(), 1e-300);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  std::mt19937_64 engine_;
};

struct Profile {
  const char* company;
  const char* ticker;
  std::optional<Date> event;
  double start_price;
  double pre_beta;   // price response to attention before the event
  double post_beta;  // ... and from the event on
  double volatility;
  bool constant_scale;
};

const std::set<Date>& holidays() {
  static const std::set<Date> days{
      {2020, 1, 1},  {2020, 1, 20}, {2020, 2, 17}, {2020, 4, 10}, {2020, 5, 25},
      {2020, 7, 3},  {2020, 9, 7},  {2020, 11, 26}, {2020, 12, 25}, {2021, 1, 1},
      {2021, 1, 18}, {2021, 2, 15}, {2021, 4, 2}};
  return days;
}

bool weekend(Date d) {
  const auto wd = std::chrono::weekday{d.days()};
  return wd == std::chrono::Saturday || wd == std::chrono::Sunday;
}

std::string f6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void generate(const Profile& p, const std::filesystem::path& dir, std::uint64_t seed) {
  const Date first{2020, 1, 1};
  const Date last{2021, 5, 20};
  Rng rng(seed);

  std::vector<Date> days;
  for (Date d = first; d <= last; d = d.add_days(1)) days.push_back(d);

  // Latent attention: quiet with sporadic news spikes before the event, high
  // and noisy afterwards. Companies without an event ramp up mid-2020.
  std::vector<double> attention(days.size());
  double spike = 0;
  for (std::size_t i = 0; i < days.size(); ++i) {
    const bool post = p.event ? days[i] >= *p.event : days[i] >= Date{2020, 7, 1};
    if (rng.uniform() < 0.03) spike += 0.25 + 0.3 * rng.uniform();
    spike *= 0.85;
    const double ramp = double(i) / double(days.size());
    const double level = post ? 0.45 + 0.35 * rng.uniform() : 0.03 + 0.12 * ramp;
    attention[i] = std::clamp(level + spike + 0.03 * rng.normal(), 0.0, 2.0);
  }
  const double peak = *std::max_element(attention.begin(), attention.end());

  std::string trend = "Date,Score,Scale\n";
  std::vector<double> score(days.size());
  for (std::size_t i = 0; i < days.size(); ++i) {
    score[i] = std::round(100.0 * attention[i] / peak);
    const double scale = p.constant_scale ? 1.0 : 1.0 + score[i] / 50.0;
    trend += days[i].iso() + "," + f6(score[i]) + "," + f6(scale) + "\n";
  }

  std::string prices = "Date,Open,High,Low,Close,Adj Close,Volume\n";
  double walk = 0;
  double prev_close = p.start_price;
  double smooth = attention[0];
  for (std::size_t i = 0; i < days.size(); ++i) {
    const Date d = days[i];
    smooth = 0.8 * smooth + 0.2 * score[i] / 100.0;
    walk += p.volatility * rng.normal();
    if (weekend(d)) continue;
    if (holidays().contains(d)) {
      if (d == Date{2020, 11, 26}) prices += d.iso() + ",null,null,null,null,null,null\n";
      continue;
    }
    const bool post = p.event && d >= *p.event;
    const double beta = post ? p.post_beta : p.pre_beta;
    const double close = std::max(1.0, p.start_price * std::exp(walk) * (1.0 + beta * smooth));
    const double open = std::max(1.0, prev_close * (1.0 + 0.01 * rng.normal()));
    const double high = std::max(open, close) * (1.0 + 0.02 * rng.uniform());
    const double low = std::min(open, close) * (1.0 - 0.02 * rng.uniform());
    const auto volume = static_cast<long long>(1e6 * (1.0 + 4.0 * rng.uniform()));
    prices += d.iso() + "," + f6(std::round(open * 1e4) / 1e4) + "," +
              f6(std::ceil(high * 1e4) / 1e4) + "," + f6(std::floor(low * 1e4) / 1e4) + "," +
              f6(std::round(close * 1e4) / 1e4) + "," + f6(std::round(close * 1e4) / 1e4) + "," +
              std::to_string(volume) + "\n";
    prev_close = close;
  }

  eventlens::write_file(dir / "trends" / (std::string(p.ticker) + ".csv"), trend);
  eventlens::write_file(dir / "prices" / (std::string(p.ticker) + ".csv"), prices);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: eventlens-fixture <output-dir>\n";
    return 1;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir / "prices");
  std::filesystem::create_directories(dir / "trends");

  const Profile profiles[] = {
      {"Moderna", "MRNA", Date{2020, 12, 21}, 21.0, 5.0, 6.0, 0.008, false},
      {"Pfizer", "PFE", Date{2020, 12, 14}, 33.0, 0.5, 0.3, 0.006, false},
      {"NovaVax", "NVAX", std::nullopt, 4.5, 12.0, 12.0, 0.02, true},
      {"AstraZeneca", "AZN", Date{2021, 1, 4}, 50.0, 0.05, -0.06, 0.008, false},
      {"Johnson & Johnson", "JNJ", Date{2021, 3, 2}, 148.0, 0.3, -0.25, 0.006, false},
  };

  std::string companies;
  std::string events;
  std::uint64_t seed = 20210413;
  for (const auto& p : profiles) {
    generate(p, dir, seed++);
    if (!companies.empty()) companies += ",\n";
    companies += std::string("    {\"company\": \"") + p.company + "\", \"ticker\": \"" + p.ticker +
                 "\", \"trend_keyword\": \"" + p.company +
                 "\",\n     \"price_source\": {\"file\": \"prices/" + p.ticker +
                 ".csv\"}, \"trend_source\": \"trends/" + p.ticker + ".csv\"}";
    if (!events.empty()) events += ",\n";
    events += std::string("    \"") + p.company + "\": " +
              (p.event ? "\"" + p.event->iso() + "\"" : std::string("null"));
  }

  const std::string config = "{\n  \"window\": {\"start\": \"2020-01-01\", \"end\": \"2021-04-13\"},\n"
                             "  \"control_tolerance\": 0.05,\n  \"seed\": 42,\n"
                             "  \"events\": {\n" + events + "\n  },\n"
                             "  \"companies\": [\n" + companies + "\n  ]\n}\n";
  eventlens::write_file(dir / "config.json", config);
  std::cout << "fixture written to " << dir.string() << "\n";
  return 0;
}
