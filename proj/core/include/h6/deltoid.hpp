#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "h6/linalg.hpp"

namespace h6 {

// The parameter domain of the X6 family is the intersection
// D = ran(phi) with ran(-phi) of two deltoids, characterized by
// D[alpha] <= 0 and D[-alpha] <= 0 for the cubic discriminant below.

/// phi[x,y] = x + y + 1/(x*y); its range is the closed deltoid |.| <= 3.
Complex phi(Phase x, Phase y);

/// Discriminant of f_alpha(x) = x^3 - alpha x^2 + conj(alpha) x - 1:
/// |alpha|^4 + 18|alpha|^2 - 8 Re[alpha^3] - 27.
double discriminant(Complex alpha);

/// True iff discriminant(alpha) <= 1e-12 and discriminant(-alpha) <= 1e-12,
/// i.e. alpha lies in the closed region D (boundary included).
bool in_region(Complex alpha);

enum class RegionClass { interior, boundary_plus, boundary_minus, cusp_both, outside };

const char* region_class_name(RegionClass c);

/// Classifies with band 1e-9 around the two zero sets:
///   interior       both discriminants < -band
///   boundary_plus  |D[alpha]| <= band, D[-alpha] < -band
///   boundary_minus |D[-alpha]| <= band, D[alpha] < -band
///   cusp_both      both within the band
///   outside        otherwise
RegionClass classify(Complex alpha);

struct ExtremalPoints {
  std::array<Complex, 6> maximal;  // sqrt(6*sqrt(3)-9) * e^{i(pi/6 + k*pi/3)}
  std::array<Complex, 6> minimal;  // e^{i*k*pi/3}, k = 1..6
};

ExtremalPoints extremal_points();

struct RegionSample {
  Complex alpha;
  RegionClass cls;
  double d_plus;   // discriminant(alpha)
  double d_minus;  // discriminant(-alpha)
};

/// Regular grid evaluation, row-major with y as the outer loop.
std::vector<RegionSample> sample_region(double xmin, double xmax, double ymin,
                                        double ymax, std::size_t nx,
                                        std::size_t ny);

/// CSV with header "re,im,class,d_plus,d_minus".
void write_region_csv(std::ostream& out, std::span<const RegionSample> samples);

}  // namespace h6
