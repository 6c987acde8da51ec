#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace isograph {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

// Malformed or inconsistent input (bad file, violated precondition).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numerical check that the construction itself failed.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kTolRep = 1e-10;

}  // namespace isograph
