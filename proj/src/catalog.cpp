#include "siegel/catalog.hpp"

#include <cmath>
#include <sstream>

#include "siegel/special.hpp"

namespace siegel {

namespace {

Point base_point(int n, cd zn, cd z1 = 0.0) {
  std::vector<cd> zp(static_cast<std::size_t>(n - 1));
  if (n > 1) zp[0] = z1;
  return Point(std::move(zp), zn);
}

HoloFun normalised(const HoloFun& f) { return f - HoloFun::constant(f.dim(), f(Point::i_point(f.dim()))); }

}  // namespace

std::vector<CatalogEntry> bloch_catalog(int n) {
  const Point I = Point::i_point(n);
  const auto bt = SpaceTag::bloch_tilde();
  std::vector<CatalogEntry> out;
  out.push_back({"log rho(z,i)", HoloFun::log_kernel(I), bt});
  out.push_back({"rho(z,i)^-1 - 1", normalised(HoloFun::kernel_power(I, -1.0)), bt});
  out.push_back({"rho(z,i)^-2 - 1", normalised(HoloFun::kernel_power(I, -2.0)), bt});
  if (n == 1) {
    const Point w = base_point(1, cd(1.0, 2.0));
    out.push_back({"log rho(z,1+2i) - c", normalised(HoloFun::log_kernel(w)), bt});
    out.push_back({"rho(z,1+2i)^-1 - c", normalised(HoloFun::kernel_power(w, -1.0)), bt});
    out.push_back({"i log rho(z,i) + rho(z,i)^-1/2 - 1",
                   normalised(HoloFun::log_kernel(I) * cd(0.0, 1.0) + HoloFun::kernel_power(I, -0.5)), bt});
  } else {
    const Point w = base_point(n, cd(1.0, 2.0), 0.5);
    out.push_back({"log rho(z,w) - c", normalised(HoloFun::log_kernel(w)), bt});
    out.push_back({"z1 rho(z,i)^-1", HoloFun::coordinate(n, 0) * HoloFun::kernel_power(I, -1.0), bt});
  }
  return out;
}

std::vector<CatalogEntry> hardy_catalog(double p) {
  std::vector<CatalogEntry> out;
  const double a0 = 1.0 / p;
  for (double a : {a0 + 0.5, a0 + 1.0, a0 + 2.0}) {
    for (cd w : {cd(0.0, 1.0), cd(0.0, 2.0), cd(1.0, 2.0)}) {
      std::ostringstream name;
      name << "rho(z," << w.real() << (w.imag() >= 0 ? "+" : "") << w.imag() << "i)^-" << a;
      out.push_back({name.str(), HoloFun::kernel_power(Point(w), -a), SpaceTag::hardy(p, a)});
    }
  }
  return out;
}

std::vector<CatalogEntry> derivative_catalog(int n) {
  const Point I = Point::i_point(n);
  const Point w = base_point(n, cd(0.5, 1.5), cd(0.3, -0.2));
  const auto none = SpaceTag::s_t(0.0);
  std::vector<CatalogEntry> out;
  out.push_back({"rho(z,w)^-3", HoloFun::kernel_power(w, -3.0), none});
  out.push_back({"rho(z,w)^-2.5", HoloFun::kernel_power(w, -2.5), none});
  out.push_back({"rho(z,i)^0.5", HoloFun::kernel_power(I, 0.5), none});
  out.push_back({"log rho(z,w)", HoloFun::log_kernel(w), none});
  out.push_back({"z_n^2", HoloFun::coordinate(n, n - 1) * HoloFun::coordinate(n, n - 1), none});
  out.push_back({"log rho(z,i) * rho(z,w)^-1",
                 HoloFun::log_kernel(I) * HoloFun::kernel_power(w, -1.0), none});
  if (n > 1)
    out.push_back({"z1 z_n + z1^2 rho(z,i)^-2", HoloFun::coordinate(n, 0) * HoloFun::coordinate(n, n - 1) +
                                                   HoloFun::coordinate(n, 0) * HoloFun::coordinate(n, 0) *
                                                       HoloFun::kernel_power(I, -2.0),
                   none});
  return out;
}

}  // namespace siegel
