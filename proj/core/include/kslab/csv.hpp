#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "kslab/admissibility.hpp"
#include "kslab/field.hpp"
#include "kslab/functionals.hpp"

namespace kslab {

/// Shortest round-trip decimal form of a double (std::to_chars). Output is
/// locale-independent with '.' as decimal separator.
std::string format_double(double v);

double parse_double(const std::string& s);

/// Field files: header line "nx,ny,lx,ly", a line with those values, then ny
/// rows of nx comma-separated cell values (row-major). Round-trips exactly.
void write_field_csv(const std::filesystem::path& path, const ScalarField& f);
ScalarField read_field_csv(const std::filesystem::path& path);

extern const char* const kSeriesHeader;
void write_series_csv(const std::filesystem::path& path,
                      std::span<const FunctionalRecord> series);
std::vector<FunctionalRecord> read_series_csv(const std::filesystem::path& path);

/// Columns: name,h,lhs,rhs,residual.
void write_identity_reports_csv(const std::filesystem::path& path,
                                std::span<const IdentityReport> reports);

/// Columns: chi,feasible,best_a,best_b,best_phi.
void write_admissibility_reports_csv(const std::filesystem::path& path,
                                     std::span<const AdmissibilityReport> reports);

}  // namespace kslab
