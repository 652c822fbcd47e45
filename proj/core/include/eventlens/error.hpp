#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eventlens {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A domain value failed its construction invariant (e.g. high < low).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class MalformedHeader : public Error {
 public:
  using Error::Error;
};

class BadRow : public Error {
 public:
  BadRow(std::size_t line, std::string reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(std::move(reason)) {}

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class DuplicateDate : public Error {
 public:
  explicit DuplicateDate(std::string date)
      : Error("duplicate date " + date), date_(std::move(date)) {}
  [[nodiscard]] const std::string& date() const { return date_; }

 private:
  std::string date_;
};

class NetworkError : public Error {
 public:
  using Error::Error;
};

/// JSON payload lacks an expected field; `path()` names the first missing one.
class UnexpectedPayload : public Error {
 public:
  explicit UnexpectedPayload(std::string path)
      : Error("unexpected payload: missing " + path), path_(std::move(path)) {}
  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class MissingSnapshot : public Error {
 public:
  MissingSnapshot(std::string company, const std::string& path)
      : Error("missing snapshot for " + company + ": " + path), company_(std::move(company)) {}
  [[nodiscard]] const std::string& company() const { return company_; }

 private:
  std::string company_;
};

}  // namespace eventlens
