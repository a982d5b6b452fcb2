#pragma once

#include <compare>
#include <string>

namespace torspect {

/* Multiplication class of the Tor algebra of a codimension-3 quotient:
 * B, C(3), G(r), H(p,q), or UNCLASSIFIED(p,q,r) for parameter triples the
 * type-(at most 2) normal forms do not cover.  H(0,0) is the Golod class;
 * H(0,1) coincides with G(1) and is always reported as G(1). */
struct TorClass {
    enum class Kind { B, C, G, H, Unclassified };

    Kind kind = Kind::Unclassified;
    int x = 0, y = 0, z = 0;  // G(r): x=r; H(p,q): x=p,y=q; C(c): x=c; Unclassified: (p,q,r)

    static TorClass B() { return {Kind::B, 0, 0, 0}; }
    static TorClass C(int c) { return {Kind::C, c, 0, 0}; }
    static TorClass G(int r) { return {Kind::G, r, 0, 0}; }
    static TorClass H(int p, int q) { return {Kind::H, p, q, 0}; }
    static TorClass golod() { return H(0, 0); }
    static TorClass unclassified(int p, int q, int r) { return {Kind::Unclassified, p, q, r}; }

    bool is_golod() const { return kind == Kind::H && x == 0 && y == 0; }

    std::string str() const;
    static TorClass parse(const std::string& s);

    auto operator<=>(const TorClass&) const = default;
};

}  // namespace torspect
