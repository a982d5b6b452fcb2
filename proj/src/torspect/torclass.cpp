#include "torspect/torclass.hpp"

#include <cstdio>

#include "torspect/errors.hpp"

namespace torspect {

std::string TorClass::str() const
{
    switch (kind) {
        case Kind::B:
            return "B";
        case Kind::C:
            return "C(" + std::to_string(x) + ")";
        case Kind::G:
            return "G(" + std::to_string(x) + ")";
        case Kind::H:
            return "H(" + std::to_string(x) + "," + std::to_string(y) + ")";
        case Kind::Unclassified:
            return "UNCLASSIFIED(" + std::to_string(x) + "," + std::to_string(y) + "," +
                   std::to_string(z) + ")";
    }
    return "?";
}

TorClass TorClass::parse(const std::string& s)
{
    int a = 0, b = 0, c = 0;
    if (s == "B")
        return B();
    if (std::sscanf(s.c_str(), "C(%d)", &a) == 1)
        return C(a);
    if (std::sscanf(s.c_str(), "G(%d)", &a) == 1)
        return G(a);
    if (std::sscanf(s.c_str(), "H(%d,%d)", &a, &b) == 2)
        return H(a, b);
    if (std::sscanf(s.c_str(), "UNCLASSIFIED(%d,%d,%d)", &a, &b, &c) == 3)
        return unclassified(a, b, c);
    throw InputError("unrecognized class label: " + s);
}

}  // namespace torspect
