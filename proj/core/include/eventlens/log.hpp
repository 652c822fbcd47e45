#pragma once

#include <ostream>
#include <string_view>

namespace eventlens {

/// Line-oriented log: `[info] ...`, `[warn] ...`, `[error] ...`.
class Logger {
 public:
  explicit Logger(std::ostream& out) : out_(&out) {}

  void info(std::string_view msg) { write("info", msg); }
  void warn(std::string_view msg) {
    ++warnings_;
    write("warn", msg);
  }
  void error(std::string_view msg) {
    ++errors_;
    write("error", msg);
  }

  [[nodiscard]] int warnings() const { return warnings_; }
  [[nodiscard]] int errors() const { return errors_; }

 private:
  void write(std::string_view level, std::string_view msg);

  std::ostream* out_;
  int warnings_ = 0;
  int errors_ = 0;
};

}  // namespace eventlens
