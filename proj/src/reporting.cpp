#include "smoothram/reporting.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace smoothram {

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const BoundedValue& value) {
  return Json{{"center", to_string(value.center)}, {"radius", to_string(value.radius)}};
}

Json to_json(const ReefReport& report) {
  return Json{{"lhs", to_json(report.lhs)},
              {"rhs", to_json(report.rhs)},
              {"defect", to_json(report.defect)}};
}

Json to_json(const Conjecture1Point& point) {
  return Json{{"q", point.q},
              {"ell", point.ell},
              {"n", point.n},
              {"interval", to_json(point.interval)},
              {"expected", to_json(point.expected)},
              {"status", to_string(point.status)},
              {"X", point.cutoff}};
}

Json to_json(const SweepResult& sweep) {
  Json witnesses = Json::array();
  for (const auto& w : sweep.witnesses) witnesses.push_back(to_json(w));
  Json undecided = Json::array();
  for (const auto& u : sweep.undecided) undecided.push_back(to_json(u));
  return Json{{"points", sweep.points},
              {"consistent", sweep.consistent},
              {"witnesses", std::move(witnesses)},
              {"undecided", std::move(undecided)}};
}

Json to_json(const ResidualTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back(Json{{"a", r.a},
                        {"lhs", to_json(r.lhs)},
                        {"rhs", to_json(r.rhs)},
                        {"defect", to_json(r.defect)}});
  }
  return Json{{"delta", to_json(table.delta)},
              {"max_abs_defect", to_json(table.max_abs_defect)},
              {"max_abs_defect_in_range", to_json(table.max_abs_defect_in_range)},
              {"shifts_in_range", table.shifts_in_range},
              {"rows", std::move(rows)}};
}

Json to_json(const Corollary2Report& report) {
  return Json{{"ell", report.ell},
              {"coefficient", to_json(report.coefficient)},
              {"smooth_part", to_json(report.smooth_part)},
              {"smooth_part_carmichael", to_json(report.smooth_part_carmichael)},
              {"nonsmooth_tail", to_json(report.nonsmooth_tail)},
              {"nonsmooth_partial", to_json(report.nonsmooth_partial)},
              {"nonsmooth_partial_double", to_json(report.nonsmooth_partial_double)},
              {"consistent", report.consistent}};
}

std::string coefficients_csv(const std::vector<CoefficientRecord>& records) {
  std::ostringstream out;
  out << "ell,win_center,win_radius,car_center,car_radius,method\n";
  for (const auto& r : records) {
    out << r.ell << ',' << to_string(r.wintner.center) << ',' << to_string(r.wintner.radius)
        << ',' << to_string(r.carmichael.center) << ',' << to_string(r.carmichael.radius) << ','
        << r.method << '\n';
  }
  return out.str();
}

std::string orthogonality_csv(const OrthogonalityMatrix& matrix) {
  std::ostringstream out;
  out << 'q';
  for (u64 ell : matrix.indices) out << ',' << ell;
  out << '\n';
  for (std::size_t i = 0; i < matrix.indices.size(); ++i) {
    out << matrix.indices[i];
    for (const auto& v : matrix.values[i]) out << ',' << to_string(v);
    out << '\n';
  }
  return out.str();
}

std::string correlation_csv(const CorrelationTable& table, u64 max_shift) {
  std::ostringstream out;
  out << "a,value\n";
  for (u64 a = 1; a <= max_shift; ++a) out << a << ',' << to_string(table.value(a)) << '\n';
  return out.str();
}

Json failures_json(const std::vector<Failure>& failures) {
  Json list = Json::array();
  for (const auto& f : failures) {
    list.push_back(Json{{"check", f.check}, {"status", f.status}, {"detail", f.detail}});
  }
  return Json{{"count", failures.size()}, {"failures", std::move(list)}};
}

std::filesystem::path output_directory(const std::filesystem::path& fallback) {
  if (const char* env = std::getenv("SMOOTHRAM_OUTPUT_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return fallback;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace smoothram
