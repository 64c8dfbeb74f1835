#pragma once

#include "shintani/linalg.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace shintani {

/* Finite abelian group Z/d_1 x ... x Z/d_r with 1 < d_1 | d_2 | ... */
struct AbelianGroup {
    std::vector<long> orders;

    long size() const;
    long exponent() const;
    std::vector<long> add(std::vector<long> const & a, std::vector<long> const & b) const;
    std::vector<long> neg(std::vector<long> const & a) const;
    std::vector<long> scale(std::vector<long> const & a, long n) const;
    std::vector<long> reduce(std::vector<long> a) const;
    std::vector<long> zero() const { return std::vector<long>(orders.size(), 0); }
    /* all elements in mixed-radix order, last factor fastest */
    std::vector<std::vector<long>> elements() const;
    long index_of(std::vector<long> const & a) const;
};

/* Structure of a finite abelian group given by an element count and a
 * multiplication on indices 0..n-1 (0 is the identity). Every element
 * receives its coordinate vector in the resulting AbelianGroup. */
struct GroupPresentation {
    AbelianGroup group;
    std::vector<std::vector<long>> coords; /* per element index */
    std::vector<long> generators;          /* element indices of the cyclic generators */
};
GroupPresentation present_group(long n, std::function<long(long, long)> const & op);

} // namespace shintani
