#include "ajoin/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ajoin/errors.hpp"

namespace ajoin {

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "plain") return OutputFormat::Plain;
  throw InvalidParameter("unknown output format '" + std::string(name) + "' (json, csv, plain)");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

Json json_number(double x) {
  if (!std::isfinite(x)) return format_number(x);
  return std::stod(format_number(x));
}

Json to_json(const Spectrum& s) {
  Json values = Json::array();
  for (const auto& e : s.entries())
    values.push_back({{"value", json_number(e.value)}, {"multiplicity", e.multiplicity}, {"clause", nullptr}});
  return {{"eigenvalues", values}};
}

Json to_json(const ClosedFormSpectrum& s) {
  Json values = Json::array();
  for (const auto& e : s.solved())
    values.push_back({{"value", json_number(e.value)}, {"multiplicity", e.multiplicity}, {"clause", e.clause}});
  return {{"eigenvalues", values}};
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"m", g.size()}, {"edges", edges}};
}

Json to_json(const CospectralCertificate& c) {
  Json alphas = Json::array();
  Json devs = Json::array();
  for (double a : c.alphas) alphas.push_back(json_number(a));
  for (double d : c.deviations) devs.push_back(json_number(d));
  Json out = {
      {"cospectral", c.cospectral},
      {"tolerance", json_number(c.tol)},
      {"max_deviation", json_number(c.max_deviation)},
      {"alphas", alphas},
      {"deviations", devs},
      {"nonisomorphic_evidence", std::string(to_string(c.evidence))},
      {"evidence_detail", c.evidence_detail},
      {"note", "numeric agreement over a finite alpha grid; evidence, not proof"},
      {"graph_a", to_json(c.g_a)},
      {"graph_b", to_json(c.g_b)},
  };
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

std::string to_csv(const Spectrum& s) {
  std::ostringstream os;
  os << "value\n";
  for (double v : s.flatten()) os << format_number(v) << '\n';
  return os.str();
}

std::string to_csv(const ClosedFormSpectrum& s) {
  std::ostringstream os;
  os << "value,clause\n";
  for (const auto& e : s.solved())
    for (std::size_t k = 0; k < e.multiplicity; ++k) os << format_number(e.value) << ',' << e.clause << '\n';
  return os.str();
}

std::string to_plain(const Spectrum& s) {
  std::ostringstream os;
  for (const auto& e : s.entries()) os << format_number(e.value) << " x" << e.multiplicity << '\n';
  return os.str();
}

std::string to_plain(const ClosedFormSpectrum& s) {
  std::ostringstream os;
  for (const auto& e : s.solved())
    os << format_number(e.value) << " x" << e.multiplicity << "  " << e.clause << '\n';
  return os.str();
}

}  // namespace ajoin
