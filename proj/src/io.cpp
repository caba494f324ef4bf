#include "spinc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace spinc::io {

namespace {

Integer parse_integer(const Json& j, const std::string& field)
{
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer x;
        const auto& s = j.get_ref<const std::string&>();
        if (s.empty() || x.set_str(s, 10) != 0) throw FormatError(field, "not a decimal integer: \"" + s + "\"");
        return x;
    }
    throw FormatError(field, "expected an integer, got " + std::string(j.type_name()));
}

std::string integer_literal(const Integer& x)
{
    return x.fits_slong_p() ? x.get_str() : "\"" + x.get_str() + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string tuple_str(const std::vector<Integer>& v)
{
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(x.get_str());
    return "(" + join(parts, ", ") + ")";
}

Json element_json(const FiniteAbelianGroup& g, std::int64_t x)
{
    Json arr = Json::array();
    for (auto c : g.element(x)) arr.push_back(c);
    return arr;
}

}  // namespace

PresentationFile parse_presentation(const std::string& text, bool require_chern)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError("$", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("$", "expected a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "name" && key != "matrix" && key != "chern") throw FormatError(key, "unknown field");

    PresentationFile f;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw FormatError("name", "expected a string");
        f.name = doc["name"].get<std::string>();
    }

    if (!doc.contains("matrix")) throw FormatError("matrix", "missing");
    const Json& m = doc["matrix"];
    if (!m.is_array()) throw FormatError("matrix", "expected an array of rows");
    const std::size_t n = m.size();
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string row_field = "matrix[" + std::to_string(i) + "]";
        if (!m[i].is_array()) throw FormatError(row_field, "expected an array");
        if (m[i].size() != n)
            throw FormatError(row_field, "has " + std::to_string(m[i].size()) + " entries, matrix is not square (" +
                                             std::to_string(n) + " rows)");
        for (std::size_t j = 0; j < n; ++j) b(i, j) = parse_integer(m[i][j], row_field + "[" + std::to_string(j) + "]");
    }
    f.presentation.matrix = std::move(b);

    if (doc.contains("chern")) {
        const Json& c = doc["chern"];
        if (!c.is_array()) throw FormatError("chern", "expected an array");
        for (std::size_t i = 0; i < c.size(); ++i)
            f.presentation.chern.push_back(parse_integer(c[i], "chern[" + std::to_string(i) + "]"));
    } else if (require_chern) {
        throw FormatError("chern", "missing");
    } else {
        f.presentation.chern = f.presentation.matrix.diagonal();
    }
    validate(f.presentation);
    return f;
}

PresentationFile read_presentation(const std::string& path, bool require_chern)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str(), require_chern);
}

std::string serialize_presentation(const PresentationFile& f)
{
    const DecoratedPresentation& p = f.presentation;
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < p.matrix.rows(); ++i) {
        std::vector<std::string> entries;
        for (std::size_t j = 0; j < p.matrix.cols(); ++j) entries.push_back(integer_literal(p.matrix(i, j)));
        rows.push_back("[" + join(entries, ", ") + "]");
    }
    std::vector<std::string> chern;
    for (const auto& c : p.chern) chern.push_back(integer_literal(c));

    std::string out = "{\n";
    if (f.name) out += "  \"name\": " + Json(*f.name).dump() + ",\n";
    out += "  \"matrix\": [" + join(rows, ", ") + "],\n";
    out += "  \"chern\": [" + join(chern, ", ") + "]\n}\n";
    return out;
}

void write_presentation(const std::string& path, const PresentationFile& f)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_presentation(f);
}

std::string format_decimal(double v)
{
    if (v == 0) v = 0;   // no "-0"
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    std::string s(buf, res.ptr);
    if (s.find_first_of("eEn") != std::string::npos) return s;

    // %g drops trailing zeros; put them back so every value shows 12 digits.
    std::size_t digits = 0;
    bool leading = true;
    for (char ch : s) {
        if (ch < '0' || ch > '9') continue;
        if (leading && ch == '0') continue;
        leading = false;
        ++digits;
    }
    if (leading) digits = 1;   // the value is zero; count the "0"
    if (digits < 12 && s.find('.') == std::string::npos) s += '.';
    s.append(digits < 12 ? 12 - digits : 0, '0');
    return s;
}

Json to_json(const Integer& x)
{
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Json to_json(const IntVector& v)
{
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(to_json(x));
    return arr;
}

Json to_json(const IntMatrix& m)
{
    Json arr = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(to_json(m.row(i)));
    return arr;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const QmodZ& r) { return r.str(); }

Json to_json(const CyclotomicSum& g)
{
    const auto z = g.approx();
    Json j;
    j["modulus"] = g.modulus();
    j["coeffs"] = g.coeffs();
    j["exact"] = g.str();
    j["approx"] = {{"re", format_decimal(z.real())}, {"im", format_decimal(z.imag())}, {"display_only", true}};
    return j;
}

Json to_json(const QuadFingerprint& f)
{
    Json j;
    j["invariant_factors"] = f.factors;
    j["radical_rank"] = f.radical_rank;
    j["radical_gcd"] = to_json(f.radical_gcd);
    j["gauss_sum"] = to_json(f.gauss);
    Json values = Json::array(), defects = Json::array();
    for (const auto& v : f.values) values.push_back(to_json(v));
    for (const auto& v : f.defects) defects.push_back(to_json(v));
    j["value_multiset"] = std::move(values);
    j["defect_multiset"] = std::move(defects);
    return j;
}

Json to_json(const InvariantReport& r)
{
    Json j;
    j["free_rank"] = r.free_rank;
    j["torsion_factors"] = to_json(r.torsion_factors);
    j["chern_free_gcd"] = to_json(r.chern_free_gcd);
    j["chern_torsion"] = to_json(r.chern_torsion);
    j["canonical_chern"] = to_json(r.canonical_chern);
    j["gauss"] = to_json(r.gauss);
    Json values = Json::array(), slopes = Json::array();
    for (const auto& v : r.value_multiset) values.push_back(to_json(v));
    for (const auto& s : r.radical_slopes) slopes.push_back(to_json(s));
    j["value_multiset"] = std::move(values);
    j["radical_slopes"] = std::move(slopes);
    j["fingerprint"] = to_json(r.fingerprint);
    return j;
}

Json to_json(const EquivalenceVerdict& v, const SpincAnalysis& a, const SpincAnalysis& b)
{
    Json j;
    j["verdict"] = to_string(v.kind);
    j["regime"] = to_string(v.regime);
    if (v.witness) {
        const auto& w = *v.witness;
        const auto& gs = a.finite_part.group();
        const auto& gt = b.finite_part.group();
        Json images = Json::array();
        for (auto x : w.torsion_map.images) images.push_back(element_json(gt, x));
        Json wj;
        wj["description"] = w.str(a, b);
        wj["source_torsion_factors"] = gs.factors();
        wj["torsion_images"] = std::move(images);
        wj["free_map"] = to_json(w.free_map);
        wj["coupling_row"] = to_json(w.coupling_row);
        wj["coupling_target"] = element_json(gt, w.coupling_target);
        wj["shift"] = element_json(gt, w.shift);
        wj["verified"] = verify_witness(a, b, w);
        j["witness"] = std::move(wj);
    } else {
        j["reason"] = v.reason;
    }
    return j;
}

std::string report_text(const InvariantReport& r)
{
    std::ostringstream os;
    auto values = [](const auto& xs) {
        std::vector<std::string> parts;
        for (const auto& x : xs) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, QmodZ>) parts.push_back(x.str());
            else parts.push_back(to_string(x));
        }
        return parts.empty() ? std::string("none") : join(parts, ", ");
    };
    std::vector<std::string> factors;
    for (const auto& d : r.torsion_factors) factors.push_back(d.get_str());
    const auto z = r.gauss.approx();

    os << "free rank:        " << r.free_rank << "\n";
    os << "torsion factors:  " << (factors.empty() ? "none" : join(factors, ", ")) << "\n";
    os << "chern free gcd:   " << r.chern_free_gcd.get_str() << "\n";
    os << "chern torsion:    " << tuple_str(r.chern_torsion) << "\n";
    os << "canonical chern:  " << tuple_str(r.canonical_chern) << "\n";
    os << "gauss sum:        " << r.gauss.str() << "  (approx " << format_decimal(z.real()) << " + "
       << format_decimal(z.imag()) << "i)\n";
    os << "values:           " << values(r.value_multiset) << "\n";
    os << "radical slopes:   " << values(r.radical_slopes) << "\n";
    os << "invariant gauss:  " << r.fingerprint.gauss.str() << "\n";
    return os.str();
}

std::string verdict_text(const EquivalenceVerdict& v, const SpincAnalysis& a, const SpincAnalysis& b)
{
    std::ostringstream os;
    os << to_string(v.kind) << "\n";
    os << "regime: " << to_string(v.regime) << "\n";
    if (v.witness) {
        os << "witness: " << v.witness->str(a, b) << "\n";
        os << "witness check: " << (verify_witness(a, b, *v.witness) ? "ok" : "FAILED") << "\n";
    } else {
        os << "reason: " << v.reason << "\n";
    }
    return os.str();
}

}  // namespace spinc::io
