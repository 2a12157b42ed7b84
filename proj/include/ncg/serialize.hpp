#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ncg/fock.hpp"
#include "ncg/landau_gauge.hpp"
#include "ncg/projection.hpp"
#include "ncg/spectrum.hpp"

namespace ncg {

using Json = nlohmann::ordered_json;

/// All serialized numbers carry 15 significant digits; negative zero is
/// written as zero.
double round15(double v);
std::string format15(double v);
Json complex_json(Complex z);

/// {dim, entries: [[re, im], ...]} with entries row-major.
Json matrix_to_json(const OperatorMatrix& m);
/// Rows "row,col,re,im".
std::string matrix_to_csv(const OperatorMatrix& m);

/// {N, J (or M), keep, top_coefficient: [re, im], max_offtop_residual,
///  boundary_artifacts: [{row, col, value}], ok}
Json report_to_json(const CommutatorReport& r);
/// Header "keep,re,im,residual" then one row per report.
std::string reports_to_csv(const std::vector<CommutatorReport>& reports);
std::string reports_to_table(const std::vector<CommutatorReport>& reports);

Json spectrum_to_json(const SpectrumReport& r);
std::string spectrum_to_csv(const SpectrumReport& r);
std::string spectrum_to_table(const SpectrumReport& r);

Json convergence_to_json(const std::vector<ConvergenceRow>& rows);
/// Header "M,dk,keep,re_coeff,im_coeff,abs_error,observed_order"; the
/// order is empty on the first row.
std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows);
std::string convergence_to_table(const std::vector<ConvergenceRow>& rows);

}  // namespace ncg
