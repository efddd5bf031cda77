#include "torsion/io.hpp"

#include <charconv>

#include "torsion/errors.hpp"

namespace torsion::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError("schema violation at " + where + ": " + what);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

void check_schema(const json& doc) {
    if (!doc.is_object()) fail("/", "document must be an object");
    if (!doc.contains("schema") || doc["schema"] != kSchema) {
        fail("/schema", "expected \"" + std::string(kSchema) + "\"");
    }
}

Rational parse_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const InputError& e) {
            fail(where, e.what());
        }
    }
    fail(where, "expected an integer or a \"p/q\" string");
}

std::size_t parse_size(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::int64_t parse_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<std::int64_t>();
}

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
    return obj[key];
}

// Rows of a (rows × cols) matrix; an empty JSON array stands for any matrix with no rows.
template <typename Entry, typename ParseEntry>
void parse_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where, ParseEntry&& parse_entry,
                  Entry&& store) {
    if (!j.is_array()) fail(where, "expected an array of rows");
    if (j.size() != rows) {
        fail(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    }
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string row_where = where + "/" + std::to_string(r);
        if (!j[r].is_array() || j[r].size() != cols) {
            fail(row_where, "expected a row of " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) store(r, c, parse_entry(j[r][c], row_where + "/" + std::to_string(c)));
    }
}

RationalMatrix parse_rational_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    RationalMatrix m(rows, cols);
    parse_matrix(j, rows, cols, where, parse_rational, [&](std::size_t r, std::size_t c, Rational x) { m(r, c) = std::move(x); });
    return m;
}

GroupWord parse_word(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a word [[generator, exponent], ...]");
    std::vector<GroupWord::Letter> letters;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string w = where + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != 2) fail(w, "expected [generator, exponent]");
        const std::int64_t exponent = parse_int(j[i][1], w + "/1");
        if (exponent == 0) fail(w + "/1", "exponent must be nonzero");
        letters.push_back({parse_size(j[i][0], w + "/0"), exponent});
    }
    return GroupWord(std::move(letters));
}

GroupRingElement parse_group_ring_entry(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a list of [coefficient, word] terms");
    std::vector<GroupRingElement::Term> terms;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string w = where + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != 2) fail(w, "expected [coefficient, word]");
        terms.push_back({parse_rational(j[i][0], w + "/0"), parse_word(j[i][1], w + "/1")});
    }
    return GroupRingElement(std::move(terms));
}

std::vector<std::size_t> parse_degrees(const json& doc) {
    const json& degrees = require(doc, "degrees", "/");
    if (!degrees.is_array() || degrees.empty()) fail("/degrees", "expected a non-empty array");
    std::vector<std::size_t> dims;
    for (std::size_t q = 0; q < degrees.size(); ++q) dims.push_back(parse_size(degrees[q], "/degrees/" + std::to_string(q)));
    return dims;
}

const json& parse_boundary_list(const json& doc, std::size_t expected) {
    const json& boundaries = require(doc, "boundaries", "/");
    if (!boundaries.is_array() || boundaries.size() != expected) {
        fail("/boundaries", "expected " + std::to_string(expected) + " boundary matrices");
    }
    return boundaries;
}

json rational_json(const Rational& r) { return r.to_string(); }

json matrix_rows(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::size_t parse_exponent(std::string_view text, std::string_view whole) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end || value == 0) {
        throw InputError("malformed exact value '" + std::string(whole) + "': bad pi exponent");
    }
    return value;
}

}  // namespace

std::string render_exact(const PiRadical& v) {
    std::string body;
    bool radical = false;
    Rational coefficient = v.s();
    std::int64_t exponent = v.u();
    if (v.has_exact_sqrt()) {
        coefficient = *v.s().exact_sqrt();
        exponent = v.u() / 2;
    } else {
        radical = true;
    }
    body = coefficient.to_string();
    if (exponent > 0) body += "*pi^" + std::to_string(exponent);
    if (exponent < 0) body += "/pi^" + std::to_string(-exponent);
    return radical ? "sqrt(" + body + ")" : body;
}

PiRadical parse_exact(std::string_view text) {
    const std::string_view whole = text;
    bool radical = false;
    if (text.starts_with("sqrt(")) {
        if (!text.ends_with(")")) throw InputError("malformed exact value '" + std::string(whole) + "'");
        radical = true;
        text = text.substr(5, text.size() - 6);
    }
    std::int64_t exponent = 0;
    const auto pi_at = text.find("pi^");
    if (pi_at != std::string_view::npos) {
        if (pi_at < 2 || (text[pi_at - 1] != '*' && text[pi_at - 1] != '/')) {
            throw InputError("malformed exact value '" + std::string(whole) + "'");
        }
        exponent = static_cast<std::int64_t>(parse_exponent(text.substr(pi_at + 3), whole));
        if (text[pi_at - 1] == '/') exponent = -exponent;
        text = text.substr(0, pi_at - 1);
    }
    Rational coefficient;
    try {
        coefficient = Rational::parse(text);
    } catch (const InputError&) {
        throw InputError("malformed exact value '" + std::string(whole) + "'");
    }
    if (coefficient.sign() <= 0) throw InputError("exact value '" + std::string(whole) + "' must be positive");
    if (radical) return PiRadical(coefficient, exponent);
    return PiRadical::from_rational(coefficient) * PiRadical::pi_power(exponent);
}

ComplexDocument parse_complex_document(std::string_view text) {
    const json doc = parse_json(text);
    check_schema(doc);
    const std::vector<std::size_t> dims = parse_degrees(doc);
    const json& boundaries = parse_boundary_list(doc, dims.size() - 1);

    if (!doc.contains("representation")) {
        std::vector<RationalMatrix> matrices;
        for (std::size_t q = 1; q < dims.size(); ++q) {
            matrices.push_back(
                parse_rational_matrix(boundaries[q - 1], dims[q - 1], dims[q], "/boundaries/" + std::to_string(q - 1)));
        }
        ChainComplex complex(dims, std::move(matrices));
        if (auto v = validate_complex(complex)) {
            throw InputError("validation failed at degree " + std::to_string(v->degree) + ": " + v->message);
        }
        return {std::move(complex), std::nullopt, std::nullopt};
    }

    const json& rep_json = doc["representation"];
    const std::size_t rank = parse_size(require(rep_json, "rank", "/representation"), "/representation/rank");
    if (rank == 0) fail("/representation/rank", "rank must be positive");
    const json& images_json = require(rep_json, "images", "/representation");
    if (!images_json.is_array()) fail("/representation/images", "expected an array of matrices");
    std::vector<RationalMatrix> images;
    for (std::size_t g = 0; g < images_json.size(); ++g) {
        images.push_back(parse_rational_matrix(images_json[g], rank, rank, "/representation/images/" + std::to_string(g)));
    }
    Representation rep(rank, std::move(images));

    GroupRingComplex group_ring;
    group_ring.dims = dims;
    for (std::size_t q = 1; q < dims.size(); ++q) {
        GroupRingMatrix m(dims[q - 1], dims[q]);
        parse_matrix(boundaries[q - 1], dims[q - 1], dims[q], "/boundaries/" + std::to_string(q - 1),
                     parse_group_ring_entry,
                     [&](std::size_t r, std::size_t c, GroupRingElement e) { m(r, c) = std::move(e); });
        group_ring.boundaries.push_back(std::move(m));
    }
    ChainComplex complex = twist(group_ring, rep);
    return {std::move(complex), std::move(group_ring), std::move(rep)};
}

GradedBasis parse_basis_document(std::string_view text) {
    const json doc = parse_json(text);
    check_schema(doc);
    const json& degrees = require(doc, "basis", "/");
    if (!degrees.is_array()) fail("/basis", "expected an array of degree blocks");
    GradedBasis h;
    std::vector<bool> seen;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const std::string where = "/basis/" + std::to_string(i);
        const std::size_t q = parse_size(require(degrees[i], "degree", where), where + "/degree");
        if (q < seen.size() && seen[q]) fail(where + "/degree", "degree " + std::to_string(q) + " listed twice");
        if (q >= seen.size()) seen.resize(q + 1, false);
        seen[q] = true;
        const json& vectors = require(degrees[i], "vectors", where);
        if (!vectors.is_array()) fail(where + "/vectors", "expected an array");
        auto& target = h.at(q);
        for (std::size_t k = 0; k < vectors.size(); ++k) {
            const std::string vw = where + "/vectors/" + std::to_string(k);
            const json& scale = require(vectors[k], "scale", vw);
            const Rational s = parse_rational(require(scale, "s", vw + "/scale"), vw + "/scale/s");
            if (s.sign() <= 0) fail(vw + "/scale/s", "s must be positive");
            const std::int64_t u = parse_int(require(scale, "u", vw + "/scale"), vw + "/scale/u");
            const json& coords = require(vectors[k], "coords", vw);
            if (!coords.is_array()) fail(vw + "/coords", "expected an array");
            std::vector<Rational> v;
            for (std::size_t r = 0; r < coords.size(); ++r) v.push_back(parse_rational(coords[r], vw + "/coords/" + std::to_string(r)));
            target.push_back({PiRadical(s, u), std::move(v)});
        }
    }
    return h;
}

json complex_to_json(const ChainComplex& c) {
    json boundaries = json::array();
    for (const auto& b : c.boundaries()) boundaries.push_back(matrix_rows(b));
    return {{"schema", kSchema}, {"degrees", c.dims()}, {"boundaries", std::move(boundaries)}};
}

json complex_to_json(const GroupRingComplex& c, const Representation& rep) {
    json boundaries = json::array();
    for (const auto& b : c.boundaries) {
        json rows = json::array();
        for (std::size_t r = 0; r < b.rows(); ++r) {
            json row = json::array();
            for (std::size_t col = 0; col < b.cols(); ++col) {
                json entry = json::array();
                for (const auto& term : b(r, col).terms()) {
                    json word = json::array();
                    for (const auto& letter : term.word.letters()) word.push_back({letter.generator, letter.exponent});
                    entry.push_back({rational_json(term.coefficient), std::move(word)});
                }
                row.push_back(std::move(entry));
            }
            rows.push_back(std::move(row));
        }
        boundaries.push_back(std::move(rows));
    }
    json images = json::array();
    for (const auto& image : rep.images()) images.push_back(matrix_rows(image));
    return {{"schema", kSchema},
            {"degrees", c.dims},
            {"boundaries", std::move(boundaries)},
            {"representation", {{"rank", rep.rank()}, {"images", std::move(images)}}}};
}

json basis_to_json(const GradedBasis& h) {
    json degrees = json::array();
    for (std::size_t q = 0; q < h.degree_count(); ++q) {
        if (h.at(q).empty()) continue;
        json vectors = json::array();
        for (const auto& v : h.at(q)) {
            json coords = json::array();
            for (const auto& x : v.coords) coords.push_back(rational_json(x));
            vectors.push_back({{"scale", {{"s", rational_json(v.scale.s())}, {"u", v.scale.u()}}}, {"coords", std::move(coords)}});
        }
        degrees.push_back({{"degree", q}, {"vectors", std::move(vectors)}});
    }
    return {{"schema", kSchema}, {"basis", std::move(degrees)}};
}

}  // namespace torsion::io
