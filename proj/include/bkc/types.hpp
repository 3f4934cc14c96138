#pragma once

// Common scalar/matrix aliases, tolerances and error categories shared by the
// bkc library. All dynamic matrices act on the quadrature vector
// psi = (x_1..x_r, p_1..p_r); this basis ordering is fixed project-wide.

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace bkc {

using Complex = std::complex<double>;
using RMatrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Default tolerances. Most entry points accept overrides; these are the
/// documented defaults used by the CLI and the test suites.
struct Tolerances {
    double validation_rel = 1e-10;   // structural matrix checks, relative
    double matching_abs = 1e-8;      // eigenvalue multiset matching
    double axis_abs = 1e-9;          // half-plane / axis tagging, scaled by (1+max|lambda|)
    double defect_threshold = 1e-6;  // eigenvector-collapse threshold (scale free)
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

// Error categories. The CLI maps each category to a distinct diagnostic line;
// library users can catch the base type.
class Error : public std::runtime_error {
  public:
    Error(std::string category, const std::string& msg)
        : std::runtime_error(msg), category_(std::move(category)) {}
    const std::string& category() const { return category_; }

  private:
    std::string category_;
};

class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& msg) : Error("validation", msg) {}
};

class NumericalError : public Error {
  public:
    explicit NumericalError(const std::string& msg) : Error("numerical", msg) {}
};

class SizeError : public Error {
  public:
    explicit SizeError(const std::string& msg) : Error("size", msg) {}
};

class RangeError : public Error {
  public:
    explicit RangeError(const std::string& msg) : Error("range", msg) {}
};

/// Dynamic spectrum has eigenvalues off the imaginary axis: effective gain or
/// loss, no Bogoliubov normal form exists.
class GainLossError : public Error {
  public:
    explicit GainLossError(const std::string& msg) : Error("gain-loss", msg) {}
};

class NonDiagonalizableError : public Error {
  public:
    explicit NonDiagonalizableError(const std::string& msg) : Error("non-diagonalizable", msg) {}
};

class DegenerateModeError : public Error {
  public:
    explicit DegenerateModeError(const std::string& msg) : Error("degenerate-mode", msg) {}
};

class SymmetryViolationError : public Error {
  public:
    explicit SymmetryViolationError(const std::string& msg) : Error("symmetry-violation", msg) {}
};

class UnresolvedMatchingError : public Error {
  public:
    explicit UnresolvedMatchingError(const std::string& msg) : Error("unresolved-matching", msg) {}
};

class AmbiguousCrossingError : public Error {
  public:
    explicit AmbiguousCrossingError(const std::string& msg) : Error("ambiguous-crossing", msg) {}
};

class SingularWindingError : public Error {
  public:
    explicit SingularWindingError(const std::string& msg) : Error("singular-winding", msg) {}
};

class InconclusiveOrderError : public Error {
  public:
    explicit InconclusiveOrderError(const std::string& msg) : Error("inconclusive-order", msg) {}
};

/// J = [[0, I_r], [-I_r, 0]] in the (X; P) ordering.
inline RMatrix symplectic_form(int r) {
    RMatrix j = RMatrix::Zero(2 * r, 2 * r);
    j.block(0, r, r, r) = RMatrix::Identity(r, r);
    j.block(r, 0, r, r) = -RMatrix::Identity(r, r);
    return j;
}

}  // namespace bkc
