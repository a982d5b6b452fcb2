#include "torspect/ideal.hpp"

#include <algorithm>
#include <mutex>

#include "torspect/errors.hpp"
#include "torspect/quotient.hpp"

namespace torspect {

namespace {

Echelon full_piece(int d, Fp fp)
{
    uint32_t n = static_cast<uint32_t>(hq(3, d));
    Echelon e{Matrix::identity(n, fp), {}};
    e.pivots.resize(n);
    for (uint32_t i = 0; i < n; ++i)
        e.pivots[i] = i;
    return e;
}

Echelon empty_piece(int d, Fp fp)
{
    return Echelon{Matrix(0, static_cast<uint32_t>(hq(3, d)), fp), {}};
}

// Rows of Q_1 * rows(m), m living in degree d.
void append_shifted(RrefBuilder& b, const Matrix& m, int d)
{
    const MultTable& t = MultTable::get(1, d);
    const uint32_t nsrc = m.cols();
    std::vector<uint32_t> w(static_cast<size_t>(hq(3, d + 1)));
    for (uint32_t v = 0; v < 3; ++v) {
        for (uint32_t r = 0; r < m.rows(); ++r) {
            std::fill(w.begin(), w.end(), 0);
            for (uint32_t c = 0; c < nsrc; ++c)
                if (m(r, c) != 0)
                    w[t.at(v, c)] = m(r, c);
            b.add_row(w.data());
        }
    }
}

}  // namespace

int64_t SoclePolynomial::type() const
{
    int64_t t = 0;
    for (int64_t c : coeff)
        t += c;
    return t;
}

bool SoclePolynomial::is_monomial() const
{
    int nz = 0;
    for (int64_t c : coeff)
        if (c != 0)
            ++nz;
    return nz == 1;
}

int SoclePolynomial::low_degree() const
{
    for (size_t d = 0; d < coeff.size(); ++d)
        if (coeff[d] != 0)
            return static_cast<int>(d);
    return -1;
}

int SoclePolynomial::top_degree() const
{
    for (size_t d = coeff.size(); d-- > 0;)
        if (coeff[d] != 0)
            return static_cast<int>(d);
    return -1;
}

std::string SoclePolynomial::str() const
{
    std::string s;
    for (size_t d = 0; d < coeff.size(); ++d) {
        if (coeff[d] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (coeff[d] != 1)
            s += std::to_string(coeff[d]) + "*";
        s += d == 0 ? "1" : (d == 1 ? "chi" : "chi^" + std::to_string(d));
    }
    return s.empty() ? "0" : s;
}

bool SoclePolynomial::operator==(const SoclePolynomial& o) const
{
    size_t n = std::max(coeff.size(), o.coeff.size());
    for (size_t d = 0; d < n; ++d) {
        int64_t a = d < coeff.size() ? coeff[d] : 0;
        int64_t b = d < o.coeff.size() ? o.coeff[d] : 0;
        if (a != b)
            return false;
    }
    return true;
}

namespace {

void validate_generators(const std::vector<HPoly>& gens)
{
    for (const HPoly& g : gens) {
        if (g.degree < 2)
            throw InputError("generators must have degree >= 2");
        if (g.coeffs.size() != MonomialBasis::get(g.degree).size())
            throw InputError("generator coefficient vector has wrong length");
        bool zero =
            std::all_of(g.coeffs.begin(), g.coeffs.end(), [](uint32_t c) { return c == 0; });
        if (zero)
            throw InputError("zero generator");
    }
}

std::vector<Echelon> span_closure(const std::vector<HPoly>& gens, Fp fp, int trunc)
{
    std::vector<std::vector<const HPoly*>> by_degree(trunc + 1);
    for (const HPoly& g : gens)
        by_degree[g.degree].push_back(&g);
    std::vector<Echelon> pieces;
    pieces.push_back(empty_piece(0, fp));
    pieces.push_back(empty_piece(1, fp));
    for (int d = 2; d <= trunc; ++d) {
        RrefBuilder b(static_cast<uint32_t>(hq(3, d)), fp);
        append_shifted(b, pieces[d - 1].mat, d - 1);
        for (const HPoly* g : by_degree[d])
            b.add_row(g->coeffs.data());
        pieces.push_back(Echelon{b.matrix(), b.pivots()});
    }
    return pieces;
}

}  // namespace

GradedIdeal GradedIdeal::from_generators(const std::vector<HPoly>& gens, Fp fp, int trunc)
{
    if (trunc < 2)
        throw InputError("truncation must be at least 2");
    validate_generators(gens);
    for (const HPoly& g : gens)
        if (g.degree > trunc)
            throw InputError("generator degree exceeds truncation");
    GradedIdeal I(fp);
    I.trunc_ = trunc;
    I.pieces_ = span_closure(gens, fp, trunc);
    if (I.piece_rank(trunc) != hq(3, trunc))
        throw InputError("ideal does not reach a full piece at the truncation; "
                         "not q-primary or truncation too small");
    return I;
}

GradedIdeal GradedIdeal::from_generators_auto(const std::vector<HPoly>& gens, Fp fp, int cap)
{
    validate_generators(gens);
    if (gens.empty())
        throw InputError("empty generating set");
    int d0 = 2;
    for (const HPoly& g : gens)
        d0 = std::max(d0, g.degree);
    if (d0 + 1 > cap)
        throw InputError("generator degrees exceed the truncation cap");

    std::vector<std::vector<const HPoly*>> by_degree(cap + 1);
    for (const HPoly& g : gens)
        by_degree[g.degree].push_back(&g);
    std::vector<Echelon> pieces;
    pieces.push_back(empty_piece(0, fp));
    pieces.push_back(empty_piece(1, fp));
    int full_at = -1;
    for (int d = 2; d <= cap; ++d) {
        RrefBuilder b(static_cast<uint32_t>(hq(3, d)), fp);
        append_shifted(b, pieces[d - 1].mat, d - 1);
        for (const HPoly* g : by_degree[d])
            b.add_row(g->coeffs.data());
        pieces.push_back(Echelon{b.matrix(), b.pivots()});
        if (d >= d0 && pieces[d].rank() == hq(3, d)) {
            full_at = d;
            break;
        }
    }
    if (full_at < 0)
        throw InputError("no full piece up to degree " + std::to_string(cap) +
                         "; ideal is not q-primary");
    // Socle degree is full_at - 1; keep one full degree of headroom above it.
    pieces.push_back(full_piece(full_at + 1, fp));
    GradedIdeal I(fp);
    I.trunc_ = full_at + 1;
    I.pieces_ = std::move(pieces);
    return I;
}

GradedIdeal GradedIdeal::from_pieces(std::vector<Echelon> pieces, Fp fp)
{
    GradedIdeal I(fp);
    I.trunc_ = static_cast<int>(pieces.size()) - 1;
    I.pieces_ = std::move(pieces);
    return I;
}

const Echelon& GradedIdeal::piece(int d) const
{
    if (d <= trunc_)
        return pieces_[d];
    static std::mutex mu;
    static std::map<std::pair<uint32_t, int>, Echelon> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(fp_.modulus(), d);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, full_piece(d, fp_)).first;
    return it->second;
}

int64_t GradedIdeal::piece_rank(int d) const
{
    return d <= trunc_ ? pieces_[d].rank() : hq(3, d);
}

GradedIdeal GradedIdeal::with_truncation(int trunc) const
{
    if (trunc <= trunc_)
        return *this;
    std::vector<Echelon> pieces = pieces_;
    for (int d = trunc_ + 1; d <= trunc; ++d)
        pieces.push_back(full_piece(d, fp_));
    return from_pieces(std::move(pieces), fp_);
}

GradedIdeal intersect(const GradedIdeal& a, const GradedIdeal& b)
{
    if (!(a.field() == b.field()))
        throw InputError("intersect: modulus mismatch");
    int trunc = std::max(a.truncation(), b.truncation());
    std::vector<Echelon> pieces;
    for (int d = 0; d <= trunc; ++d) {
        Matrix m = subspace_intersect(a.piece(d).mat, b.piece(d).mat);
        Echelon e = echelon(m);
        pieces.push_back(std::move(e));
    }
    return GradedIdeal::from_pieces(std::move(pieces), a.field());
}

GradedIdeal ideal_sum(const GradedIdeal& a, const GradedIdeal& b)
{
    if (!(a.field() == b.field()))
        throw InputError("ideal_sum: modulus mismatch");
    int trunc = std::max(a.truncation(), b.truncation());
    std::vector<Echelon> pieces;
    for (int d = 0; d <= trunc; ++d)
        pieces.push_back(echelon(subspace_sum(a.piece(d).mat, b.piece(d).mat)));
    return GradedIdeal::from_pieces(std::move(pieces), a.field());
}

GradedIdeal add_power(const GradedIdeal& a, int i)
{
    if (i < 0 || i > a.truncation())
        throw InputError("add_power: exponent out of range");
    std::vector<Echelon> pieces;
    for (int d = 0; d < i; ++d)
        pieces.push_back(a.piece(d));
    for (int d = i; d <= a.truncation(); ++d)
        pieces.push_back(full_piece(d, a.field()));
    return GradedIdeal::from_pieces(std::move(pieces), a.field());
}

bool equals(const GradedIdeal& a, const GradedIdeal& b)
{
    if (!(a.field() == b.field()))
        return false;
    int trunc = std::max(a.truncation(), b.truncation());
    for (int d = 0; d <= trunc; ++d)
        if (!(a.piece(d).mat == b.piece(d).mat))
            return false;
    return true;
}

std::vector<int64_t> hilbert(const GradedIdeal& I)
{
    std::vector<int64_t> h;
    for (int d = 0; d <= I.truncation(); ++d)
        h.push_back(hq(3, d) - I.piece_rank(d));
    while (!h.empty() && h.back() == 0)
        h.pop_back();
    return h;
}

int socle_degree(const GradedIdeal& I)
{
    return static_cast<int>(hilbert(I).size()) - 1;
}

int initial_degree(const GradedIdeal& I)
{
    for (int d = 0; d <= I.truncation(); ++d)
        if (I.piece_rank(d) > 0)
            return d;
    return I.truncation() + 1;  // zero ideal within the window
}

SoclePolynomial socle_polynomial(const GradedIdeal& I)
{
    QuotientRing R(I);
    int s = socle_degree(I);
    SoclePolynomial soc;
    soc.coeff.assign(std::max(s + 1, 0), 0);
    for (int d = 0; d <= s; ++d) {
        int64_t hd = R.h(d);
        if (hd == 0)
            continue;
        // Kernel of R_d -> R_{d+1}^3, multiplication by x, y, z.
        uint32_t rows = static_cast<uint32_t>(3 * R.h(d + 1));
        Matrix m(rows, static_cast<uint32_t>(hd), I.field());
        for (int v = 0; v < 3; ++v) {
            const Matrix& mv = R.var_mult(v, d);
            for (uint32_t r = 0; r < mv.rows(); ++r)
                for (uint32_t c = 0; c < mv.cols(); ++c)
                    m(static_cast<uint32_t>(v * R.h(d + 1)) + r, c) = mv(r, c);
        }
        soc.coeff[d] = hd - echelon(m).rank();
    }
    return soc;
}

int64_t ring_type(const GradedIdeal& I)
{
    return socle_polynomial(I).type();
}

bool is_level(const GradedIdeal& I)
{
    return socle_polynomial(I).is_monomial();
}

std::map<int, int64_t> minimal_generator_degrees(const GradedIdeal& I)
{
    std::map<int, int64_t> mu;
    for (int d = 1; d <= I.truncation(); ++d) {
        RrefBuilder b(static_cast<uint32_t>(hq(3, d)), I.field());
        append_shifted(b, I.piece(d - 1).mat, d - 1);
        int64_t extra = I.piece_rank(d) - b.rank();
        if (extra != 0)
            mu[d] = extra;
    }
    return mu;
}

int64_t minimal_generators(const GradedIdeal& I)
{
    int64_t m = 0;
    for (auto& [d, c] : minimal_generator_degrees(I))
        m += c;
    return m;
}

int compute_a(const GradedIdeal& I1, const GradedIdeal& I2)
{
    if (!(I1.field() == I2.field()))
        throw InputError("compute_a: modulus mismatch");
    const int trunc = std::max(I1.truncation(), I2.truncation());
    const Fp fp = I1.field();

    // J starts as I2 and is multiplied by q once per round.
    std::vector<Matrix> J;
    for (int d = 0; d <= trunc; ++d)
        J.push_back(I2.piece(d).mat);
    for (int i = 0; i <= trunc; ++i) {
        bool inside = true;
        for (int d = 0; d <= trunc && inside; ++d)
            inside = subspace_contains_all(I1.piece(d).mat, J[d]);
        if (inside)
            return i;
        std::vector<Matrix> next;
        next.push_back(Matrix(0, 1, fp));
        for (int d = 1; d <= trunc; ++d) {
            RrefBuilder b(static_cast<uint32_t>(hq(3, d)), fp);
            append_shifted(b, J[d - 1], d - 1);
            next.push_back(b.matrix());
        }
        J = std::move(next);
    }
    throw InputError("compute_a: no containment within the truncation window");
}

int compute_b(const GradedIdeal& I1, const GradedIdeal& I2)
{
    if (!(I1.field() == I2.field()))
        throw InputError("compute_b: modulus mismatch");
    const int trunc = std::max(I1.truncation(), I2.truncation());
    int worst = 0;  // largest degree where I2_d is not inside I1_d
    for (int d = 1; d <= trunc; ++d)
        if (!subspace_contains_all(I1.piece(d).mat, I2.piece(d).mat))
            worst = d;
    return std::max(worst, 1);
}

bool is_compressed(const GradedIdeal& I, CompressedKind kind)
{
    std::vector<int64_t> h = hilbert(I);
    int s = static_cast<int>(h.size()) - 1;
    SoclePolynomial soc = socle_polynomial(I);
    if (kind == CompressedKind::Gorenstein) {
        if (soc.type() != 1)
            throw InputError("is_compressed: ring is not Gorenstein");
        for (int i = 0; i <= s; ++i)
            if (h[i] != std::min(hq(3, i), hq(3, s - i)))
                return false;
        return true;
    }
    if (soc.type() != 2)
        throw InputError("is_compressed: ring is not of type 2");
    int b = soc.low_degree();
    for (int i = 0; i <= s; ++i)
        if (h[i] != std::min(hq(3, i), hq(3, b - i) + hq(3, s - i)))
            return false;
    return true;
}

GradedIdeal power_ideal(Fp fp, int u, int trunc)
{
    if (u < 0 || trunc < u)
        throw InputError("power_ideal: need 0 <= u <= truncation");
    std::vector<Echelon> pieces;
    for (int d = 0; d < u; ++d)
        pieces.push_back(empty_piece(d, fp));
    for (int d = u; d <= trunc; ++d)
        pieces.push_back(full_piece(d, fp));
    return GradedIdeal::from_pieces(std::move(pieces), fp);
}

}  // namespace torspect
