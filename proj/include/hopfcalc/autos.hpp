// Automorphism finiteness criterion and the Danilov-Gizatullin family of
// quadric automorphisms. The printed form of the family fails symbolic
// invariance of X1 X2 + X3^2 + ... + Xn^2 (the sqrt(-1) factor flips the
// X3^2 sign); both the printed (`paper`) and the sign-repaired (`corrected`)
// variants are first-class, and the verifier adjudicates between them.
#ifndef HOPFCALC_AUTOS_HPP
#define HOPFCALC_AUTOS_HPP

#include "hopfcalc/poly.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace hopfcalc {
namespace autos {

struct FinitenessResult {
    Rational sum;      // sum 1/a_i, exact
    bool holds = false; // sum < k strictly
};

// Criterion for Aut(V-0)/C* to be finite: sum 1/a_i < k (k = 1 for
// hypersurfaces, k = codimension for complete intersections).
FinitenessResult finiteness_condition(const ExponentVector& a, std::int64_t k = 1);

enum class Variant { paper, corrected };

struct QuadricAutoParams {
    std::int64_t n = 4;                 // ambient variables X1..Xn, n >= 4
    GaussianRational alpha;             // nonzero
    GaussianRational beta;              // nonzero
    std::vector<GaussianRational> f;    // f(X1) coefficients, f[k] of X1^k
    Variant variant = Variant::corrected;
};

struct PolyMap {
    std::vector<poly::WeightedPoly> components; // images of X1..Xn
};

// paper:     X1' = b X1, X2' = b(a^2 X2 + 2a X3 f + X1 f^2),
//            X3' = i(ab X3 + b X1 f),      Xi' = ab Xi  (i >= 4)
// corrected: X3' = ab X3 + b X1 f,  X2' = b(a^2 X2 - 2a X3 f - X1 f^2)
PolyMap build_quadric_auto(const QuadricAutoParams& params);

PolyMap identity_map(std::int64_t n);

// Composition T2 after T1 (substitute T1's components into T2).
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

struct InvarianceResult {
    bool preserved = false;
    GaussianRational multiplier;   // c solved from the X1 X2 coefficient
    poly::WeightedPoly residual;   // Q o map - c Q; zero iff preserved
};

// Symbolic check that the map scales Q = X1 X2 + X3^2 + ... + Xn^2.
InvarianceResult verify_quadric_invariance(const PolyMap& map, std::int64_t n);

// For f(0) = 0 the Jacobian block at the origin is triangular and the
// spectrum is returned directly; otherwise the characteristic polynomial of
// the 3x3 block times the diagonal tail is returned unfactored.
struct CharPoly {
    std::vector<GaussianRational> coeffs; // coeffs[k] of t^k, degree n
};
using JacobianSpectrum = std::variant<std::vector<GaussianRational>, CharPoly>;

JacobianSpectrum jacobian_spectrum(const QuadricAutoParams& params);

// True iff every eigenvalue has modulus < 1. Gaussian-rational moduli
// squared are exact rationals, so the comparison is exact; the tolerance is
// reserved for inputs that are only known numerically.
bool contraction_check(const std::vector<GaussianRational>& eigenvalues,
                       double tolerance = 1e-9);

struct OrbitVerdict {
    bool rejected_origin = false;  // the origin is excluded from the cover
    bool reached_epsilon = false;  // ||T^k x|| fell below epsilon in time
    bool norms_decreasing = false; // ||T^k x|| never increased along the orbit
    bool near_fixed_point = false; // min ||T^k x - x|| <= epsilon
    double final_norm = 0.0;
    double min_displacement = 0.0;
    std::int64_t iterations_run = 0;
};

// Numeric probe of contraction / freeness on sample points. A falsifier,
// never a certifier: it can only report evidence, not prove properness.
std::vector<OrbitVerdict> orbit_probe(const PolyMap& map,
                                      const std::vector<std::vector<std::complex<double>>>& samples,
                                      std::int64_t iterations, double epsilon);

} // namespace autos
} // namespace hopfcalc

#endif
