#pragma once

#include <optional>

#include "ecctree/rational.hpp"

namespace ecc {

// m = k^2 + i with k = floor(sqrt(m)) and 0 <= i <= 2k.
struct BoundParams {
    long long m = 0;
    long long k = 0;
    long long i = 0;
};

BoundParams decompose(long long m);

struct BoundResult {
    Rational value;
    // Extremal path parameter: the half path length x for the total/center
    // and total/leaf maxima (longest path on 2x resp. 2x-1 vertices), the
    // even path length itself for the total/leaf minimum.
    long long optimal_x = 0;
    // Two parameter choices tie: i == k for the total/center minimum and
    // total/leaf maximum (x = k and x = k+1), i == 2k with k even for the
    // total/leaf minimum (lengths k and k+2).
    bool tight_for_both = false;
};

// Ecc(T)/ecc(v) <= 2n-1, n >= 2; equality at the star for n >= 3.
Rational max_total_over_center(long long n);

// Ecc(T)/ecc(v) >= n-3+2k+i/k (i <= k) or n-3+2k+(i+1)/(k+1), with n = k^2+i.
BoundResult min_total_over_center(long long n); // n >= 4

// Ecc(T)/ecc(u) <= 2n+1-2k-i/k (i <= k) or 2n+1-2k-(i+1)/(k+1), 2n-1 = k^2+i.
BoundResult max_total_over_leaf(long long n); // n >= 8

// Ecc(T)/ecc(u) >= (n-1)/2 + k/2 + i/(4k) (k even) or + (i+1)/(4(k+1)),
// with 4n-4 = k^2+i; optimal_x is the even extremal path length.
BoundResult min_total_over_leaf(long long n); // n >= 5

struct LeafCenterBounds {
    Rational max;                 // always 2
    std::optional<Rational> min;  // 1 + 1/floor((n-1)/2), present for n >= 5
};

LeafCenterBounds leaf_over_center_bounds(long long n); // n >= 3

// ecc(u)/ecc(w) <= 2 - 2/floor(n/2) over leaf pairs.
Rational max_leaf_over_leaf(long long n); // n >= 4

// Minimum total eccentricity over all trees of order n: 2n-1 for n > 2,
// with the degenerate values 2 (n = 2) and 0 (n = 1).
long long min_total_ecc(long long n);

} // namespace ecc
