#include "torspect/json_io.hpp"

#include <fstream>

#include "torspect/errors.hpp"

namespace torspect {

IdealFile parse_ideal_json(const nlohmann::json& j, std::optional<uint32_t> prime_override)
{
    IdealFile file;
    if (prime_override)
        file.prime = *prime_override;
    else if (j.contains("prime"))
        file.prime = j.at("prime").get<uint32_t>();
    else
        throw InputError("ideal file: missing \"prime\" and no --prime given");
    Fp fp(file.prime);

    if (j.contains("vars")) {
        auto vars = j.at("vars").get<std::vector<std::string>>();
        if (vars != std::vector<std::string>{"x", "y", "z"})
            throw InputError("ideal file: \"vars\" must be [\"x\",\"y\",\"z\"]");
    }
    if (j.contains("truncation"))
        file.truncation = j.at("truncation").get<int>();

    for (const auto& gen : j.at("generators")) {
        if (gen.empty())
            throw InputError("ideal file: empty generator");
        int degree = -1;
        for (const auto& term : gen) {
            auto e = term.at("e").get<std::vector<int>>();
            if (e.size() != 3 || e[0] < 0 || e[1] < 0 || e[2] < 0)
                throw InputError("ideal file: exponent must be three nonnegative integers");
            int d = e[0] + e[1] + e[2];
            if (degree < 0)
                degree = d;
            else if (degree != d)
                throw InputError("ideal file: inhomogeneous generator (degrees " +
                                 std::to_string(degree) + " and " + std::to_string(d) + ")");
        }
        HPoly poly;
        poly.degree = degree;
        poly.coeffs.assign(MonomialBasis::get(degree).size(), 0);
        const MonomialBasis& basis = MonomialBasis::get(degree);
        for (const auto& term : gen) {
            auto e = term.at("e").get<std::vector<int>>();
            int64_t c = term.at("c").get<int64_t>();
            uint32_t idx = basis.index(e[0], e[1], e[2]);
            poly.coeffs[idx] = fp.add(poly.coeffs[idx], fp.reduce(c));
        }
        bool zero = std::all_of(poly.coeffs.begin(), poly.coeffs.end(),
                                [](uint32_t c) { return c == 0; });
        if (zero)
            throw InputError("ideal file: generator vanishes modulo " +
                             std::to_string(file.prime));
        file.generators.push_back(std::move(poly));
    }
    return file;
}

IdealFile load_ideal_file(const std::string& path, std::optional<uint32_t> prime_override)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    }
    catch (const nlohmann::json::exception& e) {
        throw InputError("JSON parse failure in " + path + ": " + e.what());
    }
    return parse_ideal_json(j, prime_override);
}

GradedIdeal build_ideal(const IdealFile& file)
{
    Fp fp(file.prime);
    if (file.truncation)
        return GradedIdeal::from_generators(file.generators, fp, *file.truncation);
    return GradedIdeal::from_generators_auto(file.generators, fp);
}

nlohmann::json ideal_to_json(const GradedIdeal& I)
{
    nlohmann::json j;
    j["prime"] = I.field().modulus();
    j["vars"] = {"x", "y", "z"};
    j["truncation"] = I.truncation();
    nlohmann::json gens = nlohmann::json::array();
    // A minimal generating set: per degree, the new rows beyond Q_1 * I_{d-1}.
    for (int d = 2; d <= I.truncation(); ++d) {
        const Echelon& piece = I.piece(d);
        if (piece.rank() == 0)
            continue;
        RrefBuilder prev(static_cast<uint32_t>(hq(3, d)), I.field());
        if (d >= 1) {
            const Matrix& below = I.piece(d - 1).mat;
            const MultTable& t = MultTable::get(1, d - 1);
            std::vector<uint32_t> w(static_cast<size_t>(hq(3, d)));
            for (uint32_t v = 0; v < 3; ++v) {
                for (uint32_t r = 0; r < below.rows(); ++r) {
                    std::fill(w.begin(), w.end(), 0);
                    for (uint32_t c = 0; c < below.cols(); ++c)
                        if (below(r, c) != 0)
                            w[t.at(v, c)] = below(r, c);
                    prev.add_row(w.data());
                }
            }
        }
        const MonomialBasis& basis = MonomialBasis::get(d);
        for (uint32_t r = 0; r < piece.rank(); ++r) {
            std::vector<uint32_t> row(piece.mat.row(r), piece.mat.row(r) + piece.mat.cols());
            if (prev.contains(row))
                continue;
            prev.add_row(row.data());
            nlohmann::json gen = nlohmann::json::array();
            for (uint32_t c = 0; c < basis.size(); ++c) {
                if (row[c] == 0)
                    continue;
                gen.push_back({{"c", row[c]},
                               {"e", {basis.exps[c][0], basis.exps[c][1], basis.exps[c][2]}}});
            }
            gens.push_back(std::move(gen));
        }
        if (piece.rank() == hq(3, d))
            break;  // everything above is generated below
    }
    j["generators"] = gens;
    return j;
}

}  // namespace torspect
