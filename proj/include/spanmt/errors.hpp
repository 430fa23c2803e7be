#pragma once

#include <stdexcept>
#include <string>

namespace spanmt {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input JSON does not follow the expected schema. `path` names the
// offending location (e.g. "data[3].paragraphs[0].qas[2].id").
class SchemaError : public Error {
public:
  SchemaError(std::string path, const std::string& msg)
      : Error(path + ": " + msg), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

// context[answer_start ..] does not spell the recorded answer text.
// Signals corrupt source data; carries the offending question id.
class OffsetMismatchError : public Error {
public:
  OffsetMismatchError(std::string qa_id, const std::string& msg)
      : Error("qa '" + qa_id + "': " + msg), qa_id_(std::move(qa_id)) {}
  const std::string& qa_id() const noexcept { return qa_id_; }

private:
  std::string qa_id_;
};

class InvalidSpanError : public Error {
public:
  using Error::Error;
};

// Markup that cannot be repaired by the tolerant decoder.
class MarkupError : public Error {
public:
  using Error::Error;
};

class AuthError : public Error {
public:
  using Error::Error;
};

class QuotaError : public Error {
public:
  using Error::Error;
};

class TransportError : public Error {
public:
  using Error::Error;
};

class UnsupportedLanguageError : public Error {
public:
  using Error::Error;
};

class ManifestError : public Error {
public:
  using Error::Error;
};

class InsufficientDataError : public Error {
public:
  using Error::Error;
};

class ReviewSheetError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace spanmt
