#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace wkbem {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kGoldenAngle = kPi * (3.0 - 2.2360679774997896964091736687747);  // pi(3-sqrt 5)

/// Error with a one-word category the CLI prints as its machine-parsable prefix.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)) {}
    const std::string& category() const { return category_; }

private:
    std::string category_;
};

inline void require(bool cond, const std::string& category, const std::string& message) {
    if (!cond) throw Error(category, message);
}

/// Speed of sound, density and frequency with the derived quantities used everywhere.
struct Medium {
    double c = 343.5;    // m/s
    double rho = 1.205;  // kg/m^3
    double f = 3400.0;   // Hz

    double omega() const { return kTwoPi * f; }
    double k() const { return kTwoPi * f / c; }

    void validate() const {
        require(c > 0 && rho > 0 && f > 0, "config", "medium parameters must be positive");
    }
};

}  // namespace wkbem
