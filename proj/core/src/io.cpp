#include "lips/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lips/error.hpp"

namespace lips {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

Rational literal(const json& j, const std::string& where) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(mpz_class(j.dump(), 10));
    } catch (const InputError& e) {
        fail(where, e.what());
    }
    fail(where, "expected a number literal string");
}

std::size_t dimension(const json& doc, const char* key) {
    if (!doc.contains(key)) fail(key, "missing");
    const json& v = doc[key];
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) fail(key, "expected a non-negative integer");
    return v.get<std::size_t>();
}

Vector read_vector(const json& j, std::size_t len, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    if (j.size() != len) fail(where, "expected " + std::to_string(len) + " entries, found " + std::to_string(j.size()));
    Vector v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = literal(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

Matrix read_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rows");
    if (j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vector r = read_vector(j[i], cols, where + "[" + std::to_string(i) + "]");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
    }
    return m;
}

json write_vector(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json write_matrix(const Matrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(write_vector(m.row(i)));
    return a;
}

}  // namespace

SystemDocument parse_system(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("$", "expected a JSON object");

    SystemDocument out;
    ParametricSystem& sys = out.system;
    sys = ParametricSystem::zero(dimension(doc, "m"), dimension(doc, "n"));

    if (doc.contains("constant")) {
        const json& c = doc["constant"];
        if (!c.is_object()) fail("constant", "expected an object");
        if (c.contains("A")) sys.a0 = read_matrix(c["A"], sys.m, sys.n, "constant.A");
        if (c.contains("b")) sys.b0 = read_vector(c["b"], sys.m, "constant.b");
    }

    if (doc.contains("parameters")) {
        const json& ps = doc["parameters"];
        if (!ps.is_array()) fail("parameters", "expected an array");
        for (std::size_t k = 0; k < ps.size(); ++k) {
            const std::string where = "parameters[" + std::to_string(k) + "]";
            const json& pj = ps[k];
            if (!pj.is_object()) fail(where, "expected an object");
            if (!pj.contains("name") || !pj["name"].is_string()) fail(where + ".name", "missing or not a string");
            if (!pj.contains("interval")) fail(where + ".interval", "missing");
            Vector bounds = read_vector(pj["interval"], 2, where + ".interval");
            if (bounds[0] > bounds[1]) {
                fail(where + ".interval", "lower bound " + to_string(bounds[0]) + " exceeds upper bound " + to_string(bounds[1]));
            }
            const std::string name = pj["name"].get<std::string>();
            for (const auto& existing : sys.params) {
                if (existing.name == name) fail(where + ".name", "duplicate parameter name '" + name + "'");
            }
            Parameter& p = sys.add_parameter(name, Interval(bounds[0], bounds[1]));
            if (pj.contains("A")) p.a = read_matrix(pj["A"], sys.m, sys.n, where + ".A");
            if (pj.contains("b")) p.b = read_vector(pj["b"], sys.m, where + ".b");

            bool universal = false;
            if (pj.contains("quantifier")) {
                out.explicit_quantifiers = true;
                const json& q = pj["quantifier"];
                if (q == "forall") universal = true;
                else if (q != "exists") fail(where + ".quantifier", "expected \"forall\" or \"exists\"");
            }
            (universal ? out.quantifiers.forall_set : out.quantifiers.exists_set).push_back(k);
        }
    }

    sys.validate();
    out.tolerable = tolerable_view(sys, out.quantifiers);
    return out;
}

SystemDocument load_system(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str());
}

std::string serialize_system(const ParametricSystem& sys, const QuantifierAssignment& quant) {
    sys.validate();
    quant.validate(sys.num_params());
    json doc;
    doc["m"] = sys.m;
    doc["n"] = sys.n;
    doc["constant"] = {{"A", write_matrix(sys.a0)}, {"b", write_vector(sys.b0)}};
    json ps = json::array();
    for (std::size_t k = 0; k < sys.params.size(); ++k) {
        const auto& p = sys.params[k];
        ps.push_back({{"name", p.name},
                      {"interval", {to_string(p.range.lo()), to_string(p.range.hi())}},
                      {"A", write_matrix(p.a)},
                      {"b", write_vector(p.b)},
                      {"quantifier", quant.is_universal(k) ? "forall" : "exists"}});
    }
    doc["parameters"] = std::move(ps);
    return doc.dump(1) + "\n";
}

Vector parse_vector(std::string_view text) {
    Vector v;
    if (text.empty()) return v;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        v.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return v;
}

}  // namespace lips
