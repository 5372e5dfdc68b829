// Matrix file I/O (JSON), exact report serialization, step-function CSV and
// SVG emission. Reports carry integers and polynomial strings only; the SVG
// uses floating coordinates for drawing, as does the clearly-labeled shadow
// diagnostic block.
#pragma once

#include <string>
#include <vector>

#include "linksig/matrix.hpp"
#include "linksig/rational.hpp"
#include "linksig/signature.hpp"
#include "linksig/verify.hpp"

namespace linksig {

struct NamedMatrix {
  std::string name;
  Matrix<Int> matrix;
};

// { "name": string, "matrix": [[int,...],...] }, row-major integers.
NamedMatrix parse_matrix_json(const std::string& text);
NamedMatrix load_matrix_file(const std::string& path);
std::string matrix_to_json(const std::string& name, const Matrix<Int>& m);

std::string invariants_report_json(const std::string& name, const SeifertMatrix& s,
                                   const LinkInvariants& inv);
std::string step_function_report_json(const std::string& name, const SeifertMatrix& s,
                                      const StepFunction& sf,
                                      const std::vector<ShadowSample>& shadow);
std::string check_reports_json(const std::string& name,
                               const std::vector<TheoremReport>& reports);
std::string campaign_summary_json(const CampaignSummary& summary);
// Step-by-step audit of a localized diagonalization.
std::string diagonal_form_json(const DiagonalForm& form);

// Rows "arc_start_cos, arc_end_cos, value" then
// "point, cos_form, value_or_unresolved, ju_minus, ju_plus".
std::string step_function_csv(const StepFunction& sf);
// theta/pi on the x axis, sigma on the y axis; horizontal arc segments,
// filled dots at exact point values, open dots at unresolved points.
std::string step_function_svg(const StepFunction& sf);

void write_file(const std::string& path, const std::string& content);

}  // namespace linksig
