#include "nlslab/datum.hpp"

#include "nlslab/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nlslab {

DatumKind datum_kind_from_string(const std::string& s) {
  if (s == "gaussian") return DatumKind::gaussian;
  if (s == "sech") return DatumKind::sech;
  if (s == "tabulated") return DatumKind::tabulated;
  throw ConfigError("unknown datum.kind '" + s + "' (gaussian | sech | tabulated)");
}

std::string to_string(DatumKind k) {
  switch (k) {
    case DatumKind::gaussian: return "gaussian";
    case DatumKind::sech: return "sech";
    case DatumKind::tabulated: return "tabulated";
  }
  return "?";
}

ScatteringDatum::ScatteringDatum(DatumKind kind, Real amplitude, Real width,
                                 const GridSpec& grid)
    : kind_(kind), amplitude_(amplitude), width_(width), grid_(grid) {
  if (kind == DatumKind::tabulated)
    throw ConfigError("tabulated datum requires samples; use ScatteringDatum::load");
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude))
    throw ConfigError("datum.A must be nonnegative and finite");
  if (!(width > 0.0) || !std::isfinite(width)) throw ConfigError("datum.width must be positive");
}

ScatteringDatum::ScatteringDatum(const GridSpec& grid, ArrayXc samples)
    : kind_(DatumKind::tabulated), grid_(grid), table_(std::move(samples)) {
  if (table_->size() != grid.n_points)
    throw ConfigError("tabulated datum sample count does not match grid");
  amplitude_ = table_->abs().maxCoeff();
}

ScatteringDatum ScatteringDatum::tabulated(const GridSpec& grid, ArrayXc samples) {
  return ScatteringDatum(grid, std::move(samples));
}

ComplexField ScatteringDatum::phi() const {
  if (table_) return {grid_, *table_};
  ArrayXc s(grid_.n_points);
  for (int j = 0; j < grid_.n_points; ++j) {
    const Real u = grid_.node(j) / width_;
    s[j] = (kind_ == DatumKind::gaussian) ? amplitude_ * std::exp(-u * u)
                                          : amplitude_ / std::cosh(u);
  }
  return {grid_, s};
}

ComplexField ScatteringDatum::phi_prime() const {
  if (table_) return derivative(phi());
  ArrayXc s(grid_.n_points);
  for (int j = 0; j < grid_.n_points; ++j) {
    const Real x = grid_.node(j);
    const Real u = x / width_;
    if (kind_ == DatumKind::gaussian) {
      s[j] = amplitude_ * (-2.0 * x / (width_ * width_)) * std::exp(-u * u);
    } else {
      s[j] = -amplitude_ / width_ * std::tanh(u) / std::cosh(u);
    }
  }
  return {grid_, s};
}

ArrayXr ScatteringDatum::abs_phi() const {
  if (table_) return table_->abs();
  ArrayXr s(grid_.n_points);
  for (int j = 0; j < grid_.n_points; ++j) {
    const Real u = grid_.node(j) / width_;
    s[j] = (kind_ == DatumKind::gaussian) ? amplitude_ * std::exp(-u * u)
                                          : amplitude_ / std::cosh(u);
  }
  return s;
}

Real ScatteringDatum::linf() const {
  if (table_) return table_->abs().maxCoeff();
  return amplitude_;
}

Real ScatteringDatum::boundary_ratio() const {
  const ArrayXr a = abs_phi();
  const Real peak = a.maxCoeff();
  if (peak == 0.0) return 0.0;
  return std::max(a[0], a[grid_.n_points - 1]) / peak;
}

ScatteringDatum ScatteringDatum::load(const std::string& path, const GridSpec& grid) {
  return ScatteringDatum(grid, load_field(path, grid).samples);
}

void save_field(const std::string& path, const ComplexField& f) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  char buf[96];
  for (int j = 0; j < f.grid.n_points; ++j) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g,%.17g\n", f.grid.node(j),
                  f.samples[j].real(), f.samples[j].imag());
    out << buf;
  }
}

ComplexField load_field(const std::string& path, const GridSpec& grid) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open datum file '" + path + "'");
  ArrayXc s(grid.n_points);
  std::string line;
  int j = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (j >= grid.n_points) throw ConfigError("datum file has more rows than grid nodes");
    std::istringstream ls(line);
    Real x;
    std::string value;
    if (!(ls >> x >> value)) throw ConfigError("malformed datum line: '" + line + "'");
    Real re = 0.0, im = 0.0;
    const auto comma = value.find(',');
    if (comma == std::string::npos) {
      re = std::stod(value);
    } else {
      re = std::stod(value.substr(0, comma));
      im = std::stod(value.substr(comma + 1));
    }
    if (std::abs(x - grid.node(j)) > 1e-9 * std::max(1.0, grid.half_width))
      throw ConfigError("datum node " + std::to_string(j) + " does not match the grid (x = " +
                        std::to_string(x) + ")");
    s[j] = Complex(re, im);
    ++j;
  }
  if (j != grid.n_points) throw ConfigError("datum file has fewer rows than grid nodes");
  return {grid, s};
}

}  // namespace nlslab
