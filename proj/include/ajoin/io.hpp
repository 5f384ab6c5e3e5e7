#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "ajoin/alpha_spectra.hpp"
#include "ajoin/cospectral.hpp"
#include "ajoin/linalg.hpp"

namespace ajoin {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Plain };
OutputFormat parse_output_format(std::string_view name);

/// 12 significant digits, "-0" folded to "0", non-finite as "inf"/"-inf"/"nan".
std::string format_number(double x);
/// JSON number carrying exactly the digits of format_number; non-finite
/// values become strings.
Json json_number(double x);

Json to_json(const Spectrum& s);
Json to_json(const ClosedFormSpectrum& s);
Json to_json(const CospectralCertificate& c);
Json to_json(const Graph& g);  ///< {"n":..,"m":..,"edges":[[i,j],..]}

/// One row per eigenvalue (multiplicities expanded).
std::string to_csv(const Spectrum& s);
std::string to_csv(const ClosedFormSpectrum& s);
/// "value xmult" lines, plus the clause for closed forms.
std::string to_plain(const Spectrum& s);
std::string to_plain(const ClosedFormSpectrum& s);

}  // namespace ajoin
