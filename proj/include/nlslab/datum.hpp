#pragma once

#include "nlslab/field.hpp"

#include <optional>
#include <string>

namespace nlslab {

enum class DatumKind { gaussian, sech, tabulated };

DatumKind datum_kind_from_string(const std::string& s);
std::string to_string(DatumKind k);

/// Scattering datum phi on a grid. The analytic kinds carry closed-form
/// value/derivative/modulus evaluators; tabulated data fall back to spectral
/// differentiation and sampled moduli.
class ScatteringDatum {
 public:
  /// Analytic datum: gaussian A e^{-x^2/w^2} or sech A sech(x/w).
  ScatteringDatum(DatumKind kind, Real amplitude, Real width, const GridSpec& grid);

  /// Datum from samples on the grid nodes.
  static ScatteringDatum tabulated(const GridSpec& grid, ArrayXc samples);

  /// Two-column text file: x and complex value (re,im or plain re).
  /// Node count and positions must match the grid (no interpolation).
  static ScatteringDatum load(const std::string& path, const GridSpec& grid);

  DatumKind kind() const { return kind_; }
  Real amplitude() const { return amplitude_; }
  Real width() const { return width_; }
  const GridSpec& grid() const { return grid_; }

  ComplexField phi() const;
  ComplexField phi_prime() const;  // analytic where available, else spectral
  ArrayXr abs_phi() const;         // pointwise |phi|, analytic where available

  /// ||phi||_inf: exact (= amplitude) for the analytic kinds.
  Real linf() const;

  /// max(|phi(-L)|, |phi(L-h)|) / max|phi|; the truncation guard.
  Real boundary_ratio() const;

 private:
  ScatteringDatum(const GridSpec& grid, ArrayXc samples);

  DatumKind kind_;
  Real amplitude_ = 0.0;
  Real width_ = 1.0;
  GridSpec grid_;
  std::optional<ArrayXc> table_;
};

/// Two-column dump matching the tabulated input format.
void save_field(const std::string& path, const ComplexField& f);
ComplexField load_field(const std::string& path, const GridSpec& grid);

}  // namespace nlslab
