#include "ecctree/bounds.hpp"

namespace ecc {

BoundParams decompose(long long m) {
    if (m < 0) fail(Errc::bad_parameter, "cannot decompose a negative value");
    long long k = 0;
    while ((k + 1) * (k + 1) <= m) ++k;
    return {m, k, m - k * k};
}

Rational max_total_over_center(long long n) {
    if (n < 2) fail(Errc::bad_parameter, "total/center maximum needs n >= 2");
    return Rational(2 * n - 1);
}

BoundResult min_total_over_center(long long n) {
    if (n < 4) fail(Errc::bad_parameter, "total/center minimum needs n >= 4");
    auto [m, k, i] = decompose(n);
    BoundResult r;
    if (i <= k) {
        r.value = Rational(n - 3 + 2 * k) + Rational::of(i, k);
        r.optimal_x = k;
    } else {
        r.value = Rational(n - 3 + 2 * k) + Rational::of(i + 1, k + 1);
        r.optimal_x = k + 1;
    }
    r.tight_for_both = (i == k);
    return r;
}

BoundResult max_total_over_leaf(long long n) {
    if (n < 8) fail(Errc::bad_parameter, "total/leaf maximum needs n >= 8");
    auto [m, k, i] = decompose(2 * n - 1);
    BoundResult r;
    if (i <= k) {
        r.value = Rational(2 * n + 1 - 2 * k) - Rational::of(i, k);
        r.optimal_x = k;
    } else {
        r.value = Rational(2 * n + 1 - 2 * k) - Rational::of(i + 1, k + 1);
        r.optimal_x = k + 1;
    }
    r.tight_for_both = (i == k);
    // The witness needs 2x <= n; the theorem's proof establishes this for
    // every n >= 8.
    if (2 * r.optimal_x > n) fail(Errc::bad_parameter, "extremal path does not fit");
    return r;
}

BoundResult min_total_over_leaf(long long n) {
    if (n < 5) fail(Errc::bad_parameter, "total/leaf minimum needs n >= 5");
    auto [m, k, i] = decompose(4 * n - 4);
    BoundResult r;
    if (k % 2 == 0) {
        r.value = Rational::of(n - 1, 2) + Rational::of(k, 2) + Rational::of(i, 4 * k);
        r.optimal_x = k;
        // Path lengths k and k+2 give the same ratio exactly when
        // k(k+2) = 4n-4, i.e. i = 2k.
        r.tight_for_both = (i == 2 * k);
    } else {
        r.value = Rational::of(n - 1, 2) + Rational::of(k, 2) + Rational::of(i + 1, 4 * (k + 1));
        r.optimal_x = k + 1;
        r.tight_for_both = false;
    }
    return r;
}

LeafCenterBounds leaf_over_center_bounds(long long n) {
    if (n < 3) fail(Errc::bad_parameter, "leaf/center bounds need n >= 3");
    LeafCenterBounds b;
    b.max = Rational(2);
    if (n >= 5) b.min = Rational(1) + Rational::of(1, (n - 1) / 2);
    return b;
}

Rational max_leaf_over_leaf(long long n) {
    if (n < 4) fail(Errc::bad_parameter, "leaf/leaf maximum needs n >= 4");
    return Rational(2) - Rational::of(2, n / 2);
}

long long min_total_ecc(long long n) {
    if (n < 1) fail(Errc::bad_parameter, "order must be positive");
    if (n == 1) return 0;
    if (n == 2) return 2;
    return 2 * n - 1;
}

} // namespace ecc
