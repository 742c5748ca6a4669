#pragma once

#include <stdexcept>
#include <string>

namespace fmlat {

// Values mirror fmlat_status in fmlat.h.
enum class ErrorCode {
  Input = 1,
  Parse = 2,
  UnsupportedModel = 3,
  Coprimality = 4,
  Admissibility = 5,
  Singular = 6,
  ReductionUndefined = 7,
  Internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct InputError : Error {
  explicit InputError(const std::string& w) : Error(ErrorCode::Input, w) {}
};

// Surface files: message carries line number and key.
struct ParseError : Error {
  ParseError(int line, const std::string& key, const std::string& w)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) +
                                    (key.empty() ? "" : ", key '" + key + "'") +
                                    ": " + w),
        line(line),
        key(key) {}
  int line;
  std::string key;
};

struct UnsupportedModelError : Error {
  explicit UnsupportedModelError(const std::string& w)
      : Error(ErrorCode::UnsupportedModel, w) {}
};

struct CoprimalityError : Error {
  explicit CoprimalityError(const std::string& w)
      : Error(ErrorCode::Coprimality, w) {}
};

struct AdmissibilityError : Error {
  explicit AdmissibilityError(const std::string& w)
      : Error(ErrorCode::Admissibility, w) {}
};

struct SingularMatrixError : Error {
  explicit SingularMatrixError(const std::string& w)
      : Error(ErrorCode::Singular, w) {}
};

struct ReductionError : Error {
  explicit ReductionError(const std::string& w)
      : Error(ErrorCode::ReductionUndefined, w) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& w)
      : Error(ErrorCode::Internal, w) {}
};

}  // namespace fmlat
