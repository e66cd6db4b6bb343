#include "shiftflip/io.hpp"

#include <fstream>
#include <sstream>

namespace shiftflip {

JsonSyntaxError::JsonSyntaxError(std::string source, std::size_t line, std::size_t column, const std::string& detail)
    : InputError(source + ": malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 detail),
      line_(line),
      column_(column) {}

SchemaError::SchemaError(std::string path, const std::string& detail)
    : InputError("schema violation at " + (path.empty() ? std::string("/") : path) + ": " + detail), path_(std::move(path)) {}

namespace {

std::string at(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string at(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const Json& member(const Json& j, const std::string& path, std::string_view key) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(std::string(key));
    if (it == j.end()) throw SchemaError(at(path, key), "missing field");
    return *it;
}

const Json* optional_member(const Json& j, std::string_view key) {
    auto it = j.find(std::string(key));
    return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::size_t count_from(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        throw SchemaError(path, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

std::string string_from(const Json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path, "expected a string");
    return j.get<std::string>();
}

Labels labels_from(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array of labels");
    Labels out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_from(j[i], at(path, i)));
    return out;
}

Integer integer_from(const Json& j, const std::string& path) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Integer value;
        if (value.set_str(j.get<std::string>(), 10) != 0) throw SchemaError(path, "not a decimal integer");
        return value;
    }
    throw SchemaError(path, "expected an integer");
}

Symbol symbol_in(const Labels& alphabet, const std::string& label, const std::string& path) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == label) return i;
    throw SchemaError(path, "unknown symbol '" + label + "'");
}

Word word_in(const Labels& alphabet, const std::string& text, const std::string& path) {
    std::istringstream in(text);
    Word w;
    for (std::string label; in >> label;) w.push_back(symbol_in(alphabet, label, path));
    return w;
}

std::string format_in(const Labels& alphabet, const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + alphabet.at(w[i]);
    return out;
}

// Runs `f`, turning construction errors into schema errors at `path`.
template <typename F>
auto located(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const SchemaError&) {
        throw;
    } catch (const InputError& e) {
        throw SchemaError(path, e.what());
    }
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string detail = e.what();
        if (auto pos = detail.find("syntax error"); pos != std::string::npos) detail = detail.substr(pos);
        throw JsonSyntaxError(source, line, column, detail);
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str(), path);
}

Json integer_to_json(const Integer& value) {
    if (value.fits_slong_p()) return value.get_si();
    return value.get_str();
}

Json rows_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<Integer>> rows_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array of rows");
    std::vector<std::vector<Integer>> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const std::string row_path = at(path, r);
        if (!j[r].is_array()) throw SchemaError(row_path, "expected a row array");
        if (r > 0 && j[r].size() != j[0].size()) throw SchemaError(row_path, "row length differs from row 0");
        std::vector<Integer> row;
        for (std::size_t c = 0; c < j[r].size(); ++c) row.push_back(integer_from(j[r][c], at(row_path, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json matrix_to_json(const IntMatrix& m) {
    Json j = Json::object();
    if (m.row_labels() == m.col_labels()) {
        j["labels"] = m.row_labels();
    } else {
        j["row_labels"] = m.row_labels();
        j["col_labels"] = m.col_labels();
    }
    j["rows"] = rows_to_json(m);
    return j;
}

IntMatrix matrix_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected a matrix object");
    const auto rows = rows_from_json(member(j, path, "rows"), at(path, "rows"));
    Labels row_labels;
    Labels col_labels;
    if (optional_member(j, "labels") != nullptr) {
        row_labels = col_labels = labels_from(j["labels"], at(path, "labels"));
    } else if (optional_member(j, "row_labels") != nullptr) {
        row_labels = labels_from(j["row_labels"], at(path, "row_labels"));
        col_labels = labels_from(member(j, path, "col_labels"), at(path, "col_labels"));
    } else {
        row_labels = col_labels = numbered_labels(rows.size());
    }
    if (rows.size() != row_labels.size()) throw SchemaError(at(path, "rows"), "row count does not match the labels");
    if (!rows.empty() && rows[0].size() != col_labels.size()) {
        throw SchemaError(at(path, "rows/0"), "column count does not match the labels");
    }
    return located(path, [&] { return IntMatrix::from_rows(row_labels, col_labels, rows); });
}

Json pair_to_json(const FlipPair& p) {
    Json j = Json::object();
    j["name"] = p.name();
    j["alphabet"] = p.alphabet();
    j["A"] = rows_to_json(p.A());
    j["J"] = rows_to_json(p.J());
    return j;
}

FlipPair pair_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected a flip pair object");
    const auto a_rows = rows_from_json(member(j, path, "A"), at(path, "A"));
    const auto j_rows = rows_from_json(member(j, path, "J"), at(path, "J"));
    const Labels alphabet = optional_member(j, "alphabet") != nullptr ? labels_from(j["alphabet"], at(path, "alphabet"))
                                                                      : numbered_labels(a_rows.size());
    const std::string name = optional_member(j, "name") != nullptr ? string_from(j["name"], at(path, "name")) : "";
    if (a_rows.size() != alphabet.size() || (!a_rows.empty() && a_rows[0].size() != alphabet.size())) {
        throw SchemaError(at(path, "A"), "A must be square of the alphabet's size");
    }
    if (j_rows.size() != alphabet.size() || (!j_rows.empty() && j_rows[0].size() != alphabet.size())) {
        throw SchemaError(at(path, "J"), "J must be square of the alphabet's size");
    }
    IntMatrix A = located(at(path, "A"), [&] { return IntMatrix::from_rows(alphabet, alphabet, a_rows); });
    IntMatrix J = located(at(path, "J"), [&] { return IntMatrix::from_rows(alphabet, alphabet, j_rows); });
    return located(path, [&] { return validate_flip_pair(std::move(A), std::move(J), name); });
}

Json series_to_json(const TruncatedSeries& s) {
    Json coeffs = Json::array();
    for (const Rational& q : s.coeffs()) coeffs.push_back(rational_to_string(q));
    Json j = Json::object();
    j["order"] = s.order();
    j["coeffs"] = std::move(coeffs);
    return j;
}

TruncatedSeries series_from_json(const Json& j, const std::string& path) {
    const std::size_t order = count_from(member(j, path, "order"), at(path, "order"));
    const Json& coeffs = member(j, path, "coeffs");
    if (!coeffs.is_array() || coeffs.size() != order + 1) {
        throw SchemaError(at(path, "coeffs"), "expected an array of order + 1 coefficients");
    }
    std::vector<Rational> values;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const std::string p = at(at(path, "coeffs"), k);
        if (coeffs[k].is_number_integer()) {
            values.emplace_back(integer_from(coeffs[k], p));
        } else {
            values.push_back(located(p, [&] { return rational_from_string(string_from(coeffs[k], p)); }));
        }
    }
    return TruncatedSeries(order, std::move(values));
}

Json certificate_to_json(const HalfElemCert& c) {
    Json j = Json::object();
    j["kind"] = "he";
    j["lag"] = 1;
    j["R"] = rows_to_json(c.R);
    j["S"] = rows_to_json(c.S);
    return j;
}

Json certificate_to_json(const ShiftFlipCert& c) {
    Json j = Json::object();
    j["kind"] = "sfe";
    j["lag"] = c.lag;
    j["R"] = rows_to_json(c.R);
    j["S"] = rows_to_json(c.S);
    return j;
}

CertificateDoc certificate_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected a certificate object");
    CertificateDoc doc;
    doc.kind = optional_member(j, "kind") != nullptr ? string_from(j["kind"], at(path, "kind")) : "he";
    if (doc.kind != "he" && doc.kind != "sfe") throw SchemaError(at(path, "kind"), "expected \"he\" or \"sfe\"");
    if (optional_member(j, "lag") != nullptr) doc.lag = count_from(j["lag"], at(path, "lag"));
    if (doc.kind == "he" && doc.lag != 1) throw SchemaError(at(path, "lag"), "a half elementary certificate has lag 1");
    const auto rows_of = [&](const Json& m, const std::string& p) {
        return m.is_object() ? [&] {
            const IntMatrix matrix = matrix_from_json(m, p);
            std::vector<std::vector<Integer>> rows;
            for (std::size_t r = 0; r < matrix.rows(); ++r) rows.push_back(matrix.row(r));
            return rows;
        }()
                             : rows_from_json(m, p);
    };
    doc.R = rows_of(member(j, path, "R"), at(path, "R"));
    if (optional_member(j, "S") != nullptr) doc.S = rows_of(j["S"], at(path, "S"));
    return doc;
}

Json chain_to_json(const StrongChain& chain) {
    Json pairs = Json::array();
    for (const FlipPair& p : chain.pairs) pairs.push_back(pair_to_json(p));
    Json links = Json::array();
    for (const HalfElemCert& c : chain.links) links.push_back(certificate_to_json(c));
    Json j = Json::object();
    j["pairs"] = std::move(pairs);
    j["links"] = std::move(links);
    return j;
}

StrongChain chain_from_json(const Json& j, const std::string& path) {
    const Json& pairs = member(j, path, "pairs");
    const Json& links = member(j, path, "links");
    if (!pairs.is_array() || pairs.empty()) throw SchemaError(at(path, "pairs"), "expected a non-empty array of pairs");
    if (!links.is_array() || links.size() + 1 != pairs.size()) {
        throw SchemaError(at(path, "links"), "expected exactly one link between consecutive pairs");
    }
    StrongChain chain;
    for (std::size_t i = 0; i < pairs.size(); ++i) chain.pairs.push_back(pair_from_json(pairs[i], at(at(path, "pairs"), i)));
    for (std::size_t i = 0; i < links.size(); ++i) {
        const std::string p = at(at(path, "links"), i);
        const CertificateDoc doc = certificate_from_json(links[i], p);
        if (doc.kind != "he") throw SchemaError(at(p, "kind"), "chain links must be half elementary");
        const FlipPair& src = chain.pairs[i];
        const FlipPair& dst = chain.pairs[i + 1];
        IntMatrix R = located(at(p, "R"), [&] { return link_matrix(src, dst, doc.R); });
        IntMatrix S = doc.S ? located(at(p, "S"), [&] { return IntMatrix::from_rows(dst.alphabet(), src.alphabet(), *doc.S); })
                            : derive_S(src, dst, R);
        chain.links.push_back({src, dst, std::move(R), std::move(S)});
    }
    return chain;
}

BlockFlipSpec block_flip_from_json(const Json& j, const std::string& path) {
    BlockFlipSpec spec;
    spec.A = matrix_from_json(member(j, path, "A"), at(path, "A"));
    if (!spec.A.is_square()) throw SchemaError(at(path, "A"), "expected a square matrix");
    spec.window = count_from(member(j, path, "window"), at(path, "window"));
    const Labels& alphabet = spec.A.row_labels();
    const Json& phi = member(j, path, "phi");
    const std::string phi_path = at(path, "phi");
    const auto add = [&](const std::string& block, const std::string& image, const std::string& p) {
        const Word w = word_in(alphabet, block, p);
        if (w.size() != 2 * spec.window + 1) throw SchemaError(p, "block length must be 2 * window + 1");
        if (!spec.phi.emplace(w, symbol_in(alphabet, image, p)).second) throw SchemaError(p, "duplicate block");
    };
    if (phi.is_array()) {
        for (std::size_t i = 0; i < phi.size(); ++i) {
            const std::string p = at(phi_path, i);
            add(string_from(member(phi[i], p, "block"), at(p, "block")), string_from(member(phi[i], p, "image"), at(p, "image")),
                p);
        }
    } else if (phi.is_object()) {
        for (const auto& [block, image] : phi.items()) add(block, string_from(image, at(phi_path, block)), at(phi_path, block));
    } else {
        throw SchemaError(phi_path, "expected an array of {block, image} entries");
    }
    return spec;
}

Json block_flip_to_json(const BlockFlipSpec& spec) {
    Json phi = Json::array();
    for (const auto& [w, image] : spec.phi) {
        Json entry = Json::object();
        entry["block"] = format_in(spec.A.row_labels(), w);
        entry["image"] = spec.A.row_labels().at(image);
        phi.push_back(std::move(entry));
    }
    Json j = Json::object();
    j["A"] = matrix_to_json(spec.A);
    j["window"] = spec.window;
    j["phi"] = std::move(phi);
    return j;
}

OneBlockConjugacySpec conjugacy_from_json(const Json& j, const std::string& path) {
    OneBlockConjugacySpec spec{pair_from_json(member(j, path, "from"), at(path, "from")),
                               pair_from_json(member(j, path, "to"), at(path, "to")),
                               {},
                               count_from(member(j, path, "inverse_window"), at(path, "inverse_window"))};
    const Json& psi = member(j, path, "psi");
    const std::string psi_path = at(path, "psi");
    if (!psi.is_object()) throw SchemaError(psi_path, "expected an object mapping labels to labels");
    std::vector<Symbol> image(spec.source.size(), 0);
    std::vector<char> seen(spec.source.size(), 0);
    for (const auto& [from, to] : psi.items()) {
        const std::string p = at(psi_path, from);
        const Symbol a = symbol_in(spec.source.alphabet(), from, p);
        image[a] = symbol_in(spec.target.alphabet(), string_from(to, p), p);
        seen[a] = 1;
    }
    for (Symbol a = 0; a < seen.size(); ++a) {
        if (!seen[a]) throw SchemaError(at(psi_path, spec.source.alphabet()[a]), "psi is undefined on this symbol");
    }
    spec.psi = SymbolMap(std::move(image));
    return spec;
}

Json conjugacy_to_json(const OneBlockConjugacySpec& spec) {
    Json psi = Json::object();
    for (Symbol a = 0; a < spec.source.size(); ++a) psi[spec.source.alphabet()[a]] = spec.target.alphabet()[spec.psi(a)];
    Json j = Json::object();
    j["from"] = pair_to_json(spec.source);
    j["to"] = pair_to_json(spec.target);
    j["psi"] = std::move(psi);
    j["inverse_window"] = spec.inverse_window;
    return j;
}

}  // namespace shiftflip
