#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spinpair {

using complexd = std::complex<double>;

using Matrix3cd = Eigen::Matrix3cd;
using Matrix4cd = Eigen::Matrix4cd;
using Matrix8cd = Eigen::Matrix<complexd, 8, 8>;
using Matrix8x4cd = Eigen::Matrix<complexd, 8, 4>;
using Matrix4x8cd = Eigen::Matrix<complexd, 4, 8>;
using Matrix16cd = Eigen::Matrix<complexd, 16, 16>;
using Vector16cd = Eigen::Matrix<complexd, 16, 1>;

// Raised when a linear solve or propagation leaves the numerically sane
// regime (ill-conditioned elimination, nonfinite state entries, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for malformed configuration input; message carries key/line info.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spinpair
