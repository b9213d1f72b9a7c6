#pragma once

#include <regex>
#include <string>

#include "dalg/examples.hpp"
#include "dalg/io.hpp"

// Built-in algebras and operators by name:
//   V_c(n)  V_2  L_2  L_2_dual  L(2,n)  p1(D)  dY(N,D)  zero(n)
//   real_example  gf2t_example
// The last two carry their own field; the others are built over `field`.

namespace dalg {

inline std::string builtin_algebra_names() {
    return "V_c(n), V_2, L_2, L_2_dual, L(2,n), p1(D), dY(N,D), zero(n), real_example, gf2t_example";
}

inline std::optional<AnyAlgebra> named_algebra(const std::string& name, const AnyField& field) {
    if (name == "real_example") return AnyAlgebra(real_example());
    if (name == "gf2t_example") return AnyAlgebra(gf2t_example());
    std::smatch m;
    auto num = [&](int i) { return static_cast<std::size_t>(std::stoul(m[i].str())); };
    return std::visit(
        [&](const auto& f) -> std::optional<AnyAlgebra> {
            using S = std::decay_t<decltype(f.zero())>;
            static const std::regex vc(R"(V_c\((\d+)\))"), l2n_re(R"(L\(2,(\d+)\))"), p1(R"(p1\((\d+)\))"),
                dy(R"(dY\((\d+),(\d+)\))"), zero(R"(zero\((\d+)\))");
            if (name == "V_2") return AnyAlgebra(v2<S>(f));
            if (name == "L_2") return AnyAlgebra(l2<S>(f));
            if (name == "L_2_dual") return AnyAlgebra(l2_dual<S>(f));
            if (std::regex_match(name, m, vc)) return AnyAlgebra(commutative_vc<S>(f, num(1)));
            if (std::regex_match(name, m, l2n_re)) return AnyAlgebra(l2n<S>(f, num(1)));
            if (std::regex_match(name, m, p1)) return AnyAlgebra(p1_quotient<S>(f, num(1)));
            if (std::regex_match(name, m, dy)) return AnyAlgebra(yangian_dy<S>(f, num(1), num(2)));
            if (std::regex_match(name, m, zero)) return AnyAlgebra(zero_algebra<S>(f, num(1)));
            return std::nullopt;
        },
        field);
}

/// A built-in name, or otherwise a file path.
inline AnyAlgebra algebra_by_name_or_file(const std::string& source, const AnyField& field) {
    if (auto a = named_algebra(source, field)) return *a;
    return load_algebra(read_file(source));
}

inline AnyOperator operator_by_name_or_file(const std::string& source) {
    if (source == "real_example") return AnyOperator(real_example_operator());
    if (source == "gf2t_example") return AnyOperator(gf2t_example_operator());
    return load_operator(read_file(source));
}

}  // namespace dalg
