#pragma once

#include <fstream>
#include <optional>
#include <type_traits>
#include <regex>
#include <sstream>
#include <string>
#include <variant>

#include "dalg/algebra.hpp"
#include "dalg/endv.hpp"
#include "dalg/field/scalar_io.hpp"

// Text formats. Basis indices are 1-based in text.
//
//   field: GF(3)
//   dim: 2
//   name: L_2
//   {{1,1}} = 1 mod 3 * e_1 (x) e_2 + 2 mod 3 * e_2 (x) e_1
//
//   field: Q
//   n: 2
//   <n^2 rows of n^2 comma-separated scalars>

namespace dalg {

using AnyAlgebra = std::variant<DoubleAlgebra<Rational>, DoubleAlgebra<Zp>, DoubleAlgebra<RatFunc>>;
using AnyOperator = std::variant<EndOperator<Rational>, EndOperator<Zp>, EndOperator<RatFunc>>;

template <FieldScalar S>
std::string format_scalar(const S& x) {
    if constexpr (std::is_same_v<S, RatFunc>) return "(" + x.to_string() + ")";
    else return x.to_string();
}

template <FieldScalar S>
std::string format_tensor(const Tensor2<S>& t) {
    std::string out;
    const std::size_t n = t.dim();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            if (t(k, l).is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += format_scalar(t(k, l)) + " * e_" + std::to_string(k + 1) + " (x) e_" + std::to_string(l + 1);
        }
    return out.empty() ? "0" : out;
}

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    return trim(h == std::string::npos ? line : line.substr(0, h));
}

template <FieldScalar S>
S parse_coefficient(const field_of<S>& f, std::string c) {
    c = trim(c);
    if (!c.empty() && c.back() == '*') c = trim(c.substr(0, c.size() - 1));
    if (!c.empty() && c.front() == '+') c = trim(c.substr(1));
    if (c.empty()) return f.one();
    if (c.front() == '-') {
        std::string rest = trim(c.substr(1));
        return -(rest.empty() ? f.one() : parse_coefficient<S>(f, rest));
    }
    return parse_scalar(f, c);
}

}  // namespace detail

/// Sum of terms `c * e_k (x) e_l`, or `0`.
template <FieldScalar S>
Tensor2<S> parse_tensor(const field_of<S>& f, std::size_t n, const std::string& text) {
    Tensor2<S> t(f, n);
    if (detail::strip_spaces(text) == "0") return t;
    static const std::regex term(R"(e_(\d+)\s*\(x\)\s*e_(\d+))");
    std::size_t pos = 0;
    bool any = false;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), term); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        std::string coef = text.substr(pos, static_cast<std::size_t>(m.position()) - pos);
        std::size_t k = std::stoul(m[1].str()), l = std::stoul(m[2].str());
        if (k < 1 || k > n || l < 1 || l > n) throw parse_error("basis index out of range in '" + m.str() + "'");
        t(k - 1, l - 1) = t(k - 1, l - 1) + detail::parse_coefficient<S>(f, coef);
        pos = static_cast<std::size_t>(m.position() + m.length());
        any = true;
    }
    if (!any || !detail::trim(text.substr(pos)).empty()) throw parse_error("bad tensor literal '" + text + "'");
    return t;
}

template <FieldScalar S>
std::string save_algebra(const DoubleAlgebra<S>& V) {
    std::ostringstream os;
    os << "field: " << V.field().tag() << "\n";
    os << "dim: " << V.dim() << "\n";
    if (!V.name().empty()) os << "name: " << V.name() << "\n";
    for (std::size_t i = 0; i < V.dim(); ++i)
        for (std::size_t j = 0; j < V.dim(); ++j)
            if (!V.constants(i, j).is_zero())
                os << "{{" << i + 1 << "," << j + 1 << "}} = " << format_tensor(V.constants(i, j)) << "\n";
    return os.str();
}

inline AnyAlgebra load_algebra(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<AnyField> field;
    std::optional<std::size_t> dim;
    std::string name;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::string>> entries;
    static const std::regex entry(R"(\{\{\s*(\d+)\s*,\s*(\d+)\s*\}\}\s*=\s*(.*))");
    while (std::getline(in, line)) {
        line = detail::strip_comment(line);
        if (line.empty()) continue;
        std::smatch m;
        if (line.rfind("field:", 0) == 0) field = parse_field_tag(line.substr(6));
        else if (line.rfind("dim:", 0) == 0) dim = static_cast<std::size_t>(detail::parse_int(detail::strip_spaces(line.substr(4))));
        else if (line.rfind("name:", 0) == 0) name = detail::trim(line.substr(5));
        else if (std::regex_match(line, m, entry))
            entries.push_back({{std::stoul(m[1].str()), std::stoul(m[2].str())}, m[3].str()});
        else throw parse_error("unrecognised line '" + line + "'");
    }
    if (!field || !dim) throw parse_error("algebra file needs 'field:' and 'dim:'");
    const std::size_t n = *dim;
    if (n == 0) throw parse_error("dim must be positive");
    return std::visit(
        [&](const auto& f) -> AnyAlgebra {
            using S = std::decay_t<decltype(f.zero())>;
            auto table = DoubleAlgebra<S>::empty_table(f, n);
            for (const auto& [ij, rhs] : entries) {
                auto [i, j] = ij;
                if (i < 1 || i > n || j < 1 || j > n) throw parse_error("bracket index out of range");
                table[(i - 1) * n + (j - 1)] = table[(i - 1) * n + (j - 1)] + parse_tensor<S>(f, n, rhs);
            }
            return DoubleAlgebra<S>(f, n, std::move(table), name);
        },
        *field);
}

template <FieldScalar S>
std::string save_operator(const EndOperator<S>& R) {
    std::ostringstream os;
    os << "field: " << R.field().tag() << "\n";
    os << "n: " << R.n() << "\n";
    const auto& m = R.matrix();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).to_string();
        os << "\n";
    }
    return os.str();
}

inline AnyOperator load_operator(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<AnyField> field;
    std::optional<std::size_t> dim;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        line = detail::strip_comment(line);
        if (line.empty()) continue;
        if (line.rfind("field:", 0) == 0) field = parse_field_tag(line.substr(6));
        else if (line.rfind("n:", 0) == 0) dim = static_cast<std::size_t>(detail::parse_int(detail::strip_spaces(line.substr(2))));
        else rows.push_back(line);
    }
    if (!field || !dim) throw parse_error("operator file needs 'field:' and 'n:'");
    const std::size_t n = *dim, N = n * n;
    if (n == 0) throw parse_error("n must be positive");
    if (rows.size() != N) throw parse_error("operator file needs " + std::to_string(N) + " rows");
    return std::visit(
        [&](const auto& f) -> AnyOperator {
            using S = std::decay_t<decltype(f.zero())>;
            Matrix<S> m(f, N, N);
            for (std::size_t r = 0; r < N; ++r) {
                std::vector<std::string> cells;
                std::stringstream ss(rows[r]);
                std::string cell;
                while (std::getline(ss, cell, ',')) cells.push_back(cell);
                if (cells.size() != N) throw parse_error("operator row " + std::to_string(r + 1) + " needs " + std::to_string(N) + " entries");
                for (std::size_t c = 0; c < N; ++c) m(r, c) = parse_scalar(f, cells[c]);
            }
            return EndOperator<S>(n, std::move(m));
        },
        *field);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_argument("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace dalg
