#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "kgraphlab/error.hpp"

namespace kgraphlab {

// Element of N^k with the usual coordinate-wise lattice structure.
struct Degree {
    std::vector<int> coords;

    Degree() = default;
    explicit Degree(std::vector<int> c) : coords(std::move(c)) {}

    static Degree zero(int k) { return Degree(std::vector<int>(k, 0)); }
    static Degree unit(int k, int color) {
        Degree d = zero(k);
        d.coords[color] = 1;
        return d;
    }

    int rank() const { return static_cast<int>(coords.size()); }
    int total() const { return std::accumulate(coords.begin(), coords.end(), 0); }
    bool is_zero() const { return total() == 0; }
    int operator[](int i) const { return coords[i]; }

    auto operator<=>(const Degree&) const = default;

    std::string str() const;
};

inline bool leq(const Degree& a, const Degree& b) {
    if (a.rank() != b.rank()) return false;
    for (int i = 0; i < a.rank(); ++i)
        if (a.coords[i] > b.coords[i]) return false;
    return true;
}

inline Degree operator+(const Degree& a, const Degree& b) {
    Degree r = a;
    for (int i = 0; i < a.rank(); ++i) r.coords[i] += b.coords[i];
    return r;
}

inline Degree operator-(const Degree& a, const Degree& b) {
    if (!leq(b, a)) throw Error(ErrorCode::DegreeOutOfRange, "degree subtraction " + a.str() + " - " + b.str());
    Degree r = a;
    for (int i = 0; i < a.rank(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

inline Degree join(const Degree& a, const Degree& b) {
    Degree r = a;
    for (int i = 0; i < a.rank(); ++i)
        if (b.coords[i] > r.coords[i]) r.coords[i] = b.coords[i];
    return r;
}

inline Degree meet(const Degree& a, const Degree& b) {
    Degree r = a;
    for (int i = 0; i < a.rank(); ++i)
        if (b.coords[i] < r.coords[i]) r.coords[i] = b.coords[i];
    return r;
}

// All n in N^k with n <= bound, in lexicographic order.
std::vector<Degree> degrees_up_to(const Degree& bound);

// Parses "2,3" (or "2" for k=1). Rejects negatives and rank mismatch.
Degree parse_degree(const std::string& text, int k);

}  // namespace kgraphlab
