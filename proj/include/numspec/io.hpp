#pragma once

#include "numspec/renorm.hpp"
#include "numspec/semigroup.hpp"
#include "numspec/spectrum.hpp"

#include <string>
#include <vector>

namespace numspec {

// Matrix file schema: {"n": N, "entries": [[[re,im], ...], ...]} with
// entries[i][j] = A_ij. All emitters print numbers with 17 significant
// digits; emit(parse(F)) reproduces canonical files byte for byte.

CMatrix parse_matrix_text(const std::string& text);
CMatrix parse_matrix_file(const std::string& path);
std::string emit_matrix(const CMatrix& a);

std::string emit_region_json(const Region& region, const NormSpec& norm);

std::string emit_curve_csv(const NormCurve& curve);

std::string emit_hildebrandt_json(const std::vector<HullConvergencePoint>& report);

std::string emit_certificate_text(const Certificate& cert);

// Outer polygon, inner hull, eigenvalue markers, unit axes.
std::string emit_region_svg(const Region& region,
                            const std::vector<Complex>& eigs);

// Write-temp-rename so readers never observe partial artifacts.
void write_file_atomic(const std::string& path, const std::string& content);

std::string format_double(double v);  // %.17g, the shared number format

}  // namespace numspec
