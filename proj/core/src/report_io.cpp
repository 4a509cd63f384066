#include "mclp/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "mclp/json_writer.hpp"

namespace mclp {

namespace {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string param_str(const SweepReport& report, double value) {
  if (report.parameter_name == "budget") {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%d", static_cast<int>(value));
    return buf;
  }
  return format_double(value);
}

const char* derived_name(const SweepReport& report) {
  return report.parameter_name == "budget" ? "marginal_percent" : "efficiency";
}

}  // namespace

std::string sweep_to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << report.parameter_name << ",coverage_percent,facilities_used,"
      << derived_name(report) << ",status\n";
  for (const SweepRow& row : report.rows) {
    out << param_str(report, row.parameter_value) << ',';
    if (row.ok) {
      out << fixed2(row.coverage_percent) << ',' << row.facilities_used << ',';
      if (row.derived_metric) out << fixed2(*row.derived_metric);
      out << ",ok\n";
    } else {
      out << ",,,failed\n";
    }
  }
  return out.str();
}

std::string sweep_to_json(const SweepReport& report) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"parameter_name\": \"" << json_escape(report.parameter_name) << "\",\n";
  out << "  \"rows\": [\n";
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    const SweepRow& row = report.rows[k];
    out << "    {\"coverage_percent\": " << format_double(row.coverage_percent)
        << ", \"derived_metric\": "
        << (row.derived_metric ? format_double(*row.derived_metric) : "null")
        << ", \"facilities_used\": " << row.facilities_used
        << ", \"parameter_value\": " << format_double(row.parameter_value)
        << ", \"status\": \"" << (row.ok ? "ok" : "failed") << "\"}"
        << (k + 1 < report.rows.size() ? ",\n" : "\n");
  }
  out << "  ],\n";
  out << "  \"solver_name\": \"" << json_escape(report.solver_name) << "\"\n";
  out << "}\n";
  return out.str();
}

std::string comparison_to_csv(const ComparisonReport& report) {
  std::ostringstream out;
  out << "instance,n,m,p,dp_coverage_percent,greedy_coverage_percent,"
         "improvement_percent,dp_exact\n";
  for (const ComparisonRow& row : report.rows) {
    out << row.instance_label << ',' << row.n << ',' << row.m << ',' << row.p << ','
        << fixed2(row.dp_coverage_percent) << ',' << fixed2(row.greedy_coverage_percent)
        << ',' << fixed2(row.improvement_percent) << ',' << (row.dp_exact ? "true" : "false")
        << '\n';
  }
  for (const ComparisonAggregate& agg : report.aggregates) {
    out << "mean_" << agg.size_class << ",,,," << fixed2(agg.mean_dp_coverage_percent)
        << ',' << fixed2(agg.mean_greedy_coverage_percent) << ','
        << fixed2(agg.mean_improvement_percent) << ",\n";
  }
  return out.str();
}

std::string comparison_to_json(const ComparisonReport& report) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"aggregates\": [\n";
  for (std::size_t k = 0; k < report.aggregates.size(); ++k) {
    const ComparisonAggregate& agg = report.aggregates[k];
    out << "    {\"instances\": " << agg.instances << ", \"mean_dp_coverage_percent\": "
        << format_double(agg.mean_dp_coverage_percent)
        << ", \"mean_greedy_coverage_percent\": "
        << format_double(agg.mean_greedy_coverage_percent)
        << ", \"mean_improvement_percent\": "
        << format_double(agg.mean_improvement_percent) << ", \"size_class\": \""
        << agg.size_class << "\"}" << (k + 1 < report.aggregates.size() ? ",\n" : "\n");
  }
  out << "  ],\n";
  out << "  \"rows\": [\n";
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    const ComparisonRow& row = report.rows[k];
    out << "    {\"dp_coverage_percent\": " << format_double(row.dp_coverage_percent)
        << ", \"dp_exact\": " << (row.dp_exact ? "true" : "false")
        << ", \"greedy_coverage_percent\": " << format_double(row.greedy_coverage_percent)
        << ", \"improvement_percent\": " << format_double(row.improvement_percent)
        << ", \"instance_label\": \"" << json_escape(row.instance_label)
        << "\", \"m\": " << row.m << ", \"n\": " << row.n << ", \"p\": " << row.p << '}'
        << (k + 1 < report.rows.size() ? ",\n" : "\n");
  }
  out << "  ]\n";
  out << "}\n";
  return out.str();
}

}  // namespace mclp
