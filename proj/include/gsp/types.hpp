#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace gsp {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  StartOutsideDomain,
  OutsideDomain,
  OutsideUniquenessRegion,
  InteriorPoint,
  NoDirection,
  NonConvergence,
  StepCollapse,
  GridMismatch,
  OutOfRange,
  ArgumentOutOfMuRange,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

inline bool finite(const Vec& v) { return v.allFinite(); }

}  // namespace gsp
