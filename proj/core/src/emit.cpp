#include "ecmf/emit.hpp"

#include <cstdio>

namespace ecmf {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void render(const nlohmann::json& j, std::string& out) {
    switch (j.type()) {
    case nlohmann::json::value_t::object: {
        out += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ',';
            first = false;
            out += nlohmann::json(it.key()).dump();
            out += ':';
            render(it.value(), out);
        }
        out += '}';
        break;
    }
    case nlohmann::json::value_t::array: {
        out += '[';
        bool first = true;
        for (const auto& v : j) {
            if (!first) out += ',';
            first = false;
            render(v, out);
        }
        out += ']';
        break;
    }
    case nlohmann::json::value_t::number_float:
        out += format_double(j.get<double>());
        break;
    default:
        out += j.dump();
        break;
    }
}

void render_lines(const nlohmann::json& j, const std::string& path, std::string& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            render_lines(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
        return;
    }
    if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) render_lines(v, path + "[" + std::to_string(i++) + "]", out);
        return;
    }
    std::string leaf;
    render(j, leaf);
    out += path.empty() ? leaf : path + " = " + leaf;
    out += '\n';
}

} // namespace

std::string render_json(const nlohmann::json& j) {
    std::string out;
    render(j, out);
    out += '\n';
    return out;
}

std::string render_text(const nlohmann::json& j) {
    std::string out;
    render_lines(j, "", out);
    return out;
}

nlohmann::json json_of(const BigInt& v) { return v.str(); }

nlohmann::json json_of(const BigRat& v) { return to_string(v); }

nlohmann::json series_to_json(const QSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
    return {{"weight", s.weight()},
            {"lowest", s.lowest()},
            {"prec", s.prec()},
            {"coeffs", coeffs}};
}

} // namespace ecmf
