#include "h6/deltoid.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "h6/matrix_io.hpp"

namespace h6 {

namespace {
constexpr double kRegionEps = 1e-12;
constexpr double kBoundaryBand = 1e-9;
}  // namespace

Complex phi(Phase x, Phase y) {
  return x.value() + y.value() + 1.0 / (x.value() * y.value());
}

double discriminant(Complex alpha) {
  double m2 = std::norm(alpha);
  return m2 * m2 + 18.0 * m2 - 8.0 * (alpha * alpha * alpha).real() - 27.0;
}

bool in_region(Complex alpha) {
  return discriminant(alpha) <= kRegionEps && discriminant(-alpha) <= kRegionEps;
}

const char* region_class_name(RegionClass c) {
  switch (c) {
    case RegionClass::interior: return "interior";
    case RegionClass::boundary_plus: return "boundary_plus";
    case RegionClass::boundary_minus: return "boundary_minus";
    case RegionClass::cusp_both: return "cusp_both";
    case RegionClass::outside: return "outside";
  }
  return "?";
}

RegionClass classify(Complex alpha) {
  double dp = discriminant(alpha);
  double dm = discriminant(-alpha);
  bool p_band = std::abs(dp) <= kBoundaryBand;
  bool m_band = std::abs(dm) <= kBoundaryBand;
  if (p_band && m_band) return RegionClass::cusp_both;
  if (p_band && dm < -kBoundaryBand) return RegionClass::boundary_plus;
  if (m_band && dp < -kBoundaryBand) return RegionClass::boundary_minus;
  if (dp < -kBoundaryBand && dm < -kBoundaryBand) return RegionClass::interior;
  return RegionClass::outside;
}

ExtremalPoints extremal_points() {
  ExtremalPoints pts;
  double rmax = std::sqrt(6.0 * std::sqrt(3.0) - 9.0);
  for (int k = 1; k <= 6; ++k) {
    pts.maximal[k - 1] =
        rmax * std::polar(1.0, std::numbers::pi / 6.0 +
                                   k * std::numbers::pi / 3.0);
    pts.minimal[k - 1] = std::polar(1.0, k * std::numbers::pi / 3.0);
  }
  return pts;
}

std::vector<RegionSample> sample_region(double xmin, double xmax, double ymin,
                                        double ymax, std::size_t nx,
                                        std::size_t ny) {
  if (nx < 2 || ny < 2)
    throw std::invalid_argument("sample_region: grid must be at least 2x2");
  if (!(xmin < xmax) || !(ymin < ymax))
    throw std::invalid_argument("sample_region: bounds must be ordered");
  std::vector<RegionSample> out;
  out.reserve(nx * ny);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    double y = ymin + (ymax - ymin) * static_cast<double>(iy) /
                          static_cast<double>(ny - 1);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      double x = xmin + (xmax - xmin) * static_cast<double>(ix) /
                            static_cast<double>(nx - 1);
      Complex a(x, y);
      out.push_back({a, classify(a), discriminant(a), discriminant(-a)});
    }
  }
  return out;
}

void write_region_csv(std::ostream& out,
                      std::span<const RegionSample> samples) {
  out << "re,im,class,d_plus,d_minus\n";
  for (const RegionSample& s : samples)
    out << format_real(s.alpha.real()) << ',' << format_real(s.alpha.imag())
        << ',' << region_class_name(s.cls) << ',' << format_real(s.d_plus)
        << ',' << format_real(s.d_minus) << '\n';
}

}  // namespace h6
