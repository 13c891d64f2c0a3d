#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "flatcert/arc_jet.hpp"
#include "flatcert/jets.hpp"
#include "flatcert/lojasiewicz.hpp"
#include "flatcert/polynomials.hpp"

namespace flatcert::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "flatcert/1";

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

// CSV point files: one point per row, comma separated, '.' decimal point.
std::vector<Point> read_points_csv(std::istream& in, bool header);
void write_points_csv(std::ostream& out, const std::vector<Point>& points, bool header);
/// Points followed by one extra column named `column`.
void write_points_with_column(std::ostream& out, const std::vector<Point>& points,
                              const std::vector<double>& values, const std::string& column,
                              bool header);
/// Rows (s, x1..xn) of an arc sampled on a grid.
std::vector<ArcSample> read_arc_samples_csv(std::istream& in, bool header);

Json to_json(const Point& p);
Json to_json(const HomogeneousForm& form);
Json to_json(const FormBasis& basis);
Json to_json(const ArcJet& jet);
Json to_json(const FlatnessCertificate& cert);
Json to_json(const ExponentFitReport& report);
Json to_json(const FlatnessBoundReport& report);
Json to_json(const NondegeneracyReport& report);

HomogeneousForm form_from_json(const Json& j);
ArcJet arc_jet_from_json(const Json& j);
/// Accepts a bare array of jets or {"arcs": [...]}.
std::vector<ArcJet> arc_jets_from_json(const Json& j);

void write_csv(std::ostream& out, const FlatnessCertificate& cert);
void write_csv(std::ostream& out, const ExponentFitReport& report);
void write_csv(std::ostream& out, const FlatnessBoundReport& report);
void write_csv(std::ostream& out, const NondegeneracyReport& report);

}  // namespace flatcert::io
