#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "torspect/errors.hpp"
#include "torspect/ideal.hpp"

namespace torspect::testing {

/* Tiny homogeneous-polynomial parser for fixtures: terms joined by + or -,
 * each an optional integer times factors like x, y^2, z^3 joined by optional
 * '*'.  Example: "x^2+x*y+2*z^2". */
inline HPoly hpoly(const Fp& fp, const std::string& text)
{
    struct Term {
        int64_t c;
        int e[3];
    };
    std::vector<Term> terms;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip();
    while (i < text.size()) {
        int64_t sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        }
        Term t{sign, {0, 0, 0}};
        bool saw_factor = false;
        for (;;) {
            skip();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                int64_t n = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    n = n * 10 + (text[i++] - '0');
                t.c *= n;
                saw_factor = true;
            }
            else if (i < text.size() &&
                     (text[i] == 'x' || text[i] == 'y' || text[i] == 'z')) {
                int v = text[i] == 'x' ? 0 : text[i] == 'y' ? 1 : 2;
                ++i;
                int exp = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    exp = 0;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                        exp = exp * 10 + (text[i++] - '0');
                }
                t.e[v] += exp;
                saw_factor = true;
            }
            else {
                break;
            }
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            if (i < text.size() && (text[i] == 'x' || text[i] == 'y' || text[i] == 'z' ||
                                    std::isdigit(static_cast<unsigned char>(text[i]))))
                continue;
            break;
        }
        if (!saw_factor)
            throw InputError("hpoly: malformed term in " + text);
        terms.push_back(t);
        skip();
    }
    if (terms.empty())
        throw InputError("hpoly: empty polynomial");
    int degree = terms[0].e[0] + terms[0].e[1] + terms[0].e[2];
    for (const Term& t : terms)
        if (t.e[0] + t.e[1] + t.e[2] != degree)
            throw InputError("hpoly: inhomogeneous polynomial " + text);
    HPoly p;
    p.degree = degree;
    const MonomialBasis& basis = MonomialBasis::get(degree);
    p.coeffs.assign(basis.size(), 0);
    for (const Term& t : terms) {
        uint32_t idx = basis.index(t.e[0], t.e[1], t.e[2]);
        p.coeffs[idx] = fp.add(p.coeffs[idx], fp.reduce(t.c));
    }
    return p;
}

inline std::vector<HPoly> hpolys(const Fp& fp, const std::vector<std::string>& texts)
{
    std::vector<HPoly> out;
    for (const auto& t : texts)
        out.push_back(hpoly(fp, t));
    return out;
}

inline GradedIdeal ideal_of(const Fp& fp, const std::vector<std::string>& texts, int trunc)
{
    return GradedIdeal::from_generators(hpolys(fp, texts), fp, trunc);
}

inline std::vector<int64_t> hvec(std::initializer_list<int64_t> v)
{
    return std::vector<int64_t>(v);
}

}  // namespace torspect::testing
