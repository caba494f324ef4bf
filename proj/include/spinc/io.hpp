#pragma once

// JSON file formats.
//
// PresentationFile:
//   {"name": "rp3", "matrix": [[2]], "chern": [0]}
// Fields are written in the order name, matrix, chern; "name" is omitted
// when absent.  Integers outside the 64-bit range are written as decimal
// strings and accepted in either form.
//
// Reports use exact fields throughout.  Rationals are "num/den" strings,
// Gauss sums are {"modulus": N, "coeffs": [...], ...} and the only floating
// point output is the "approx" block, which carries "display_only": true.

#include "spinc/classify.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace spinc::io {

using Json = nlohmann::ordered_json;

/// Malformed file; `field` names the offending JSON path.
class FormatError : public std::invalid_argument {
public:
    FormatError(const std::string& field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct PresentationFile {
    std::optional<std::string> name;
    DecoratedPresentation presentation;

    bool operator==(const PresentationFile&) const = default;
};

/// Parses and validates.  With require_chern = false a missing "chern"
/// defaults to diag(B).
PresentationFile parse_presentation(const std::string& text, bool require_chern = true);
PresentationFile read_presentation(const std::string& path, bool require_chern = true);
std::string serialize_presentation(const PresentationFile& f);
void write_presentation(const std::string& path, const PresentationFile& f);

/// 12 significant digits, '.' decimal point, independent of the locale.
std::string format_decimal(double v);

Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const Rational& r);
Json to_json(const QmodZ& r);
Json to_json(const CyclotomicSum& g);
Json to_json(const QuadFingerprint& f);
Json to_json(const InvariantReport& r);
Json to_json(const EquivalenceVerdict& v, const SpincAnalysis& a, const SpincAnalysis& b);

std::string report_text(const InvariantReport& r);
std::string verdict_text(const EquivalenceVerdict& v, const SpincAnalysis& a, const SpincAnalysis& b);

}  // namespace spinc::io
