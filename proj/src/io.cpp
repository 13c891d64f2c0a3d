#include "flatcert/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace flatcert::io {

namespace {

// JSON has no infinities; spell them out.
Json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

Json numbers(const std::vector<double>& vs) {
  Json a = Json::array();
  for (double v : vs) a.push_back(number(v));
  return a;
}

Json optional_point(const Point& p) { return p.dim() == 0 ? Json(nullptr) : to_json(p); }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double(std::string field, std::size_t line_no) {
  const auto b = field.find_first_not_of(" \t");
  const auto e = field.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::runtime_error("CSV line " + std::to_string(line_no) + ": empty field");
  field = field.substr(b, e - b + 1);
  double v = 0.0;
  const char* first = field.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(v)) {
    throw std::runtime_error("CSV line " + std::to_string(line_no) + ": malformed number '" + field + "'");
  }
  return v;
}

std::vector<std::vector<double>> read_rows(std::istream& in, bool header) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  bool skip = header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (skip) {
      skip = false;
      continue;
    }
    std::vector<double> row;
    for (auto& f : split_csv_line(line)) row.push_back(parse_double(f, line_no));
    if (width == 0) width = row.size();
    if (row.size() != width) {
      throw std::runtime_error("CSV line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                               " columns, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_header(std::ostream& out, std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) out << (i ? "," : "") << 'x' << (i + 1);
}

void write_row(std::ostream& out, const Point& p) {
  for (std::size_t i = 0; i < p.dim(); ++i) out << (i ? "," : "") << format_double(p[i]);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

std::vector<Point> read_points_csv(std::istream& in, bool header) {
  std::vector<Point> pts;
  for (auto& row : read_rows(in, header)) pts.emplace_back(std::move(row));
  return pts;
}

void write_points_csv(std::ostream& out, const std::vector<Point>& points, bool header) {
  if (header && !points.empty()) {
    write_header(out, points.front().dim());
    out << '\n';
  }
  for (const Point& p : points) {
    write_row(out, p);
    out << '\n';
  }
}

void write_points_with_column(std::ostream& out, const std::vector<Point>& points,
                              const std::vector<double>& values, const std::string& column, bool header) {
  if (points.size() != values.size()) throw std::domain_error("write_points_with_column: size mismatch");
  if (header && !points.empty()) {
    write_header(out, points.front().dim());
    out << ',' << column << '\n';
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    write_row(out, points[i]);
    out << ',' << format_double(values[i]) << '\n';
  }
}

std::vector<ArcSample> read_arc_samples_csv(std::istream& in, bool header) {
  std::vector<ArcSample> out;
  for (auto& row : read_rows(in, header)) {
    if (row.size() < 2) throw std::runtime_error("arc CSV: need columns s, x1..xn");
    out.push_back({row.front(), Point(std::vector<double>(row.begin() + 1, row.end()))});
  }
  return out;
}

Json to_json(const Point& p) {
  Json a = Json::array();
  for (double c : p.coords()) a.push_back(number(c));
  return a;
}

Json to_json(const HomogeneousForm& form) {
  return Json{{"n", form.n()}, {"m", form.m()}, {"order", "grlex"}, {"coeffs", numbers(form.coeffs())}};
}

Json to_json(const FormBasis& basis) {
  Json forms = Json::array();
  for (const auto& f : basis.forms) forms.push_back(to_json(f));
  return Json{{"n", basis.n},
              {"m", basis.m},
              {"order", "grlex"},
              {"tol", basis.tol},
              {"dimension", basis.dimension()},
              {"singular_values", numbers(basis.singular_values)},
              {"forms", forms}};
}

Json to_json(const ArcJet& jet) {
  Json d = Json::array();
  for (const Point& p : jet.derivatives()) d.push_back(to_json(p));
  Json j{{"n", jet.dim()}, {"K", jet.order()}, {"derivatives", d}};
  if (!jet.error_estimates().empty()) j["error_estimates"] = numbers(jet.error_estimates());
  return j;
}

Json to_json(const FlatnessCertificate& cert) {
  Json sample{{"source", cert.sample.source}, {"dim", cert.sample.dim}, {"count", cert.sample.count}};
  sample["radius"] = cert.sample.radius ? Json(*cert.sample.radius) : Json(nullptr);
  sample["seed"] = cert.sample.seed ? Json(*cert.sample.seed) : Json(nullptr);
  Json degrees = Json::array();
  for (const auto& d : cert.degrees) {
    degrees.push_back(Json{{"degree", d.degree},
                           {"dimension", d.dimension()},
                           {"sigma_min", number(d.sigma_min())},
                           {"sigma_max", number(d.sigma_max())},
                           {"vanishing_space", to_json(d.vanishing)}});
  }
  const auto failing = cert.first_failing_degree();
  return Json{{"valid", cert.valid()},
              {"first_failing_degree", failing ? Json(*failing) : Json(nullptr)},
              {"p_max", cert.p_max},
              {"tol", cert.tol},
              {"sample", sample},
              {"degrees", degrees}};
}

Json to_json(const ExponentFitReport& report) {
  Json annuli = Json::array();
  for (const auto& a : report.annuli) {
    annuli.push_back(Json{{"k", a.k},
                          {"r_inner", a.r_inner},
                          {"r_outer", a.r_outer},
                          {"samples", a.samples},
                          {"used", a.used},
                          {"excluded", a.excluded},
                          {"infinite", a.infinite},
                          {"nu", number(a.nu)},
                          {"binding_point", optional_point(a.binding_point)},
                          {"fit_nu", number(a.fit_nu)},
                          {"fit_log_c", number(a.fit_log_c)},
                          {"residual", number(a.residual)}});
  }
  return Json{{"field", report.field},
              {"distance", report.distance},
              {"annulus_geometry", "dyadic [2^-(k+1), 2^-k]"},
              {"samples_per_annulus", report.samples_per_annulus},
              {"seed", report.seed},
              {"dist_floor", report.dist_floor},
              {"verdict", to_string(report.verdict)},
              {"annuli", annuli}};
}

Json to_json(const FlatnessBoundReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back(Json{{"N", e.N},
                           {"sup_ratio", number(e.sup_ratio)},
                           {"argsup", optional_point(e.argsup)},
                           {"violations", e.violations}});
  }
  return Json{{"field", report.field},     {"mode", to_string(report.mode)},
              {"distance", report.distance}, {"radius", report.radius},
              {"samples", report.samples},   {"seed", report.seed},
              {"c_bound", report.c_bound},   {"on_set", report.on_set},
              {"entries", entries}};
}

Json to_json(const NondegeneracyReport& report) {
  Json tangents = Json::array();
  for (const Point& t : report.tangents) tangents.push_back(optional_point(t));
  Json degrees = Json::array();
  for (const auto& d : report.degrees) {
    Json table = Json::array();
    for (std::size_t j = 0; j < d.restriction.size(); ++j) {
      for (const auto& r : d.restriction[j]) {
        Json row{{"form", j}, {"arc", r.arc}};
        if (r.leading) {
          row["order"] = r.leading->order;
          row["coeff"] = number(r.leading->coeff);
        } else {
          row["order"] = nullptr;
          row["coeff"] = nullptr;
          row["flat_to_jet_order"] = true;
        }
        table.push_back(row);
      }
    }
    Json vanishing = Json::array();
    for (std::size_t j : d.forms_vanishing_along_arcs()) vanishing.push_back(j);
    degrees.push_back(Json{{"m", d.m},
                           {"tangent_dimension", d.tangent_dimension()},
                           {"condition_holds", d.condition_holds()},
                           {"tangent_space", to_json(d.tangent_space)},
                           {"forms_vanishing_along_arcs", vanishing},
                           {"arc_restriction", table}});
  }
  Json degenerate = Json::array();
  for (std::size_t i : report.degenerate_arcs) degenerate.push_back(i);
  return Json{{"n", report.n},
              {"m_max", report.m_max},
              {"tol", report.tol},
              {"condition_holds_everywhere", report.condition_holds_everywhere()},
              {"tangents", tangents},
              {"degenerate_arcs", degenerate},
              {"constant_arcs", report.constant_arcs},
              {"degrees", degrees}};
}

HomogeneousForm form_from_json(const Json& j) {
  if (j.contains("order") && j.at("order") != "grlex") throw std::runtime_error("form: only grlex order is supported");
  return HomogeneousForm(j.at("n").get<int>(), j.at("m").get<int>(), j.at("coeffs").get<std::vector<double>>());
}

ArcJet arc_jet_from_json(const Json& j) {
  std::vector<Point> derivs;
  for (const auto& d : j.at("derivatives")) derivs.emplace_back(d.get<std::vector<double>>());
  if (j.contains("K") && j.at("K").get<std::size_t>() != derivs.size()) {
    throw std::runtime_error("arc jet: K does not match the number of derivatives");
  }
  if (j.contains("n") && !derivs.empty() && j.at("n").get<std::size_t>() != derivs.front().dim()) {
    throw std::runtime_error("arc jet: n does not match the derivative length");
  }
  std::vector<double> errors;
  if (j.contains("error_estimates")) errors = j.at("error_estimates").get<std::vector<double>>();
  return ArcJet(std::move(derivs), std::move(errors));
}

std::vector<ArcJet> arc_jets_from_json(const Json& j) {
  const Json& list = j.is_object() ? j.at("arcs") : j;
  if (!list.is_array()) throw std::runtime_error("arc file: expected an array of jets");
  std::vector<ArcJet> arcs;
  for (const auto& a : list) arcs.push_back(arc_jet_from_json(a));
  return arcs;
}

void write_csv(std::ostream& out, const FlatnessCertificate& cert) {
  out << "degree,dimension,sigma_min,sigma_max\n";
  for (const auto& d : cert.degrees) {
    out << d.degree << ',' << d.dimension() << ',' << format_double(d.sigma_min()) << ','
        << format_double(d.sigma_max()) << '\n';
  }
}

void write_csv(std::ostream& out, const ExponentFitReport& report) {
  out << "k,r_inner,r_outer,samples,used,excluded,infinite,nu,fit_nu,fit_log_c,residual\n";
  for (const auto& a : report.annuli) {
    out << a.k << ',' << format_double(a.r_inner) << ',' << format_double(a.r_outer) << ',' << a.samples << ','
        << a.used << ',' << a.excluded << ',' << a.infinite << ',' << format_double(a.nu) << ','
        << format_double(a.fit_nu) << ',' << format_double(a.fit_log_c) << ',' << format_double(a.residual)
        << '\n';
  }
}

void write_csv(std::ostream& out, const FlatnessBoundReport& report) {
  out << "N,sup_ratio,violations\n";
  for (const auto& e : report.entries) {
    out << e.N << ',' << format_double(e.sup_ratio) << ',' << e.violations << '\n';
  }
}

void write_csv(std::ostream& out, const NondegeneracyReport& report) {
  out << "m,tangent_dimension,condition_holds,form,arc,order,coeff\n";
  for (const auto& d : report.degrees) {
    if (d.restriction.empty()) {
      out << d.m << ',' << d.tangent_dimension() << ',' << (d.condition_holds() ? "true" : "false") << ",,,,\n";
      continue;
    }
    for (std::size_t j = 0; j < d.restriction.size(); ++j) {
      for (const auto& r : d.restriction[j]) {
        out << d.m << ',' << d.tangent_dimension() << ',' << (d.condition_holds() ? "true" : "false") << ','
            << j << ',' << r.arc << ',';
        if (r.leading) {
          out << r.leading->order << ',' << format_double(r.leading->coeff);
        } else {
          out << "flat,";
        }
        out << '\n';
      }
    }
  }
}

}  // namespace flatcert::io
