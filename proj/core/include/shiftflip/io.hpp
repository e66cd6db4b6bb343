#ifndef SHIFTFLIP_IO_HPP
#define SHIFTFLIP_IO_HPP

// JSON documents.
//
//   Matrix       {"labels": [..], "rows": [[..]..]}   (square)
//                {"row_labels": [..], "col_labels": [..], "rows": [[..]..]}
//   FlipPair     {"name": s, "alphabet": [..], "A": rows, "J": rows}
//   Series       {"order": N, "coeffs": ["p/q", ..]}
//   Certificate  {"kind": "he"|"sfe", "lag": k, "R": rows, "S": rows?}
//   Chain        {"pairs": [FlipPair..], "links": [Certificate..]}
//   BlockFlip    {"A": Matrix, "window": n, "phi": [{"block": "a b c", "image": "d"}..]}
//   Conjugacy    {"from": FlipPair, "to": FlipPair, "psi": {label: label}, "inverse_window": m}
//
// Matrix entries are JSON integers or decimal strings (for values beyond 64 bits).

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shiftflip/constructions.hpp"
#include "shiftflip/equivalence.hpp"
#include "shiftflip/error.hpp"
#include "shiftflip/flip_pair.hpp"
#include "shiftflip/power_series.hpp"

namespace shiftflip {

using Json = nlohmann::ordered_json;

/// Text that is not JSON. what() carries "line L, column C".
class JsonSyntaxError : public InputError {
public:
    JsonSyntaxError(std::string source, std::size_t line, std::size_t column, const std::string& detail);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A document with the wrong shape. path() is a JSON pointer such as "/links/1/R/0/2".
class SchemaError : public InputError {
public:
    SchemaError(std::string path, const std::string& detail);
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

Json parse_json(std::string_view text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);

Json integer_to_json(const Integer& value);
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, const std::string& path = "");
/// Rows only, labelled by the given alphabets.
std::vector<std::vector<Integer>> rows_from_json(const Json& j, const std::string& path = "");
Json rows_to_json(const IntMatrix& m);

Json pair_to_json(const FlipPair& p);
FlipPair pair_from_json(const Json& j, const std::string& path = "");

Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j, const std::string& path = "");

struct CertificateDoc {
    std::string kind;  // "he" or "sfe"
    std::size_t lag = 1;
    std::vector<std::vector<Integer>> R;
    std::optional<std::vector<std::vector<Integer>>> S;
};

Json certificate_to_json(const HalfElemCert& c);
Json certificate_to_json(const ShiftFlipCert& c);
CertificateDoc certificate_from_json(const Json& j, const std::string& path = "");

Json chain_to_json(const StrongChain& chain);
/// Links are assembled without checking; sse_verify decides validity.
StrongChain chain_from_json(const Json& j, const std::string& path = "");

BlockFlipSpec block_flip_from_json(const Json& j, const std::string& path = "");
Json block_flip_to_json(const BlockFlipSpec& spec);

OneBlockConjugacySpec conjugacy_from_json(const Json& j, const std::string& path = "");
Json conjugacy_to_json(const OneBlockConjugacySpec& spec);

}  // namespace shiftflip

#endif  // SHIFTFLIP_IO_HPP
