#include "oracles.hpp"

#include "k3cyclo/numtheory.hpp"

#include <array>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace k3cyclo::oracle {

Int sylvester_resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("sylvester_resultant: zero input");
    const std::size_t m = f.deg(), n = g.deg();
    if (m == 0 && n == 0) return 1;
    if (m == 0) return pow_int(f.leading(), static_cast<unsigned long>(n));
    if (n == 0) return pow_int(g.leading(), static_cast<unsigned long>(m));
    const std::size_t size = m + n;
    std::vector<std::vector<Int>> a(size, std::vector<Int>(size, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) a[r][r + i] = f.coeff(m - i);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) a[n + r][r + i] = g.coeff(n - i);

    // Bareiss fraction-free elimination
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == size) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                Int q = num / prev;
                if (q * prev != num) throw std::logic_error("bareiss: inexact division");
                a[i][j] = q;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[size - 1][size - 1];
}

std::uint64_t brute_phi(std::uint64_t m) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= m; ++k)
        if (std::gcd(k, m) == 1) ++count;
    return count;
}

namespace {

Int squarefree_class(const Rat& a) {
    Int n = boost::multiprecision::numerator(a) * boost::multiprecision::denominator(a);
    Int sign = n < 0 ? -1 : 1;
    n = boost::multiprecision::abs(n);
    Int out = 1;
    for (const auto& [p, e] : factorize(n))
        if (e % 2) out *= p;
    return sign * out;
}

struct LiftSearch {
    Int a, b, p;
    std::vector<Int> pk; // p^0 .. p^k
    std::set<std::tuple<std::size_t, Int, Int, Int>> dead;

    bool value_ok(const Int& x, const Int& y, const Int& z, std::size_t level) const {
        Int v = (a * x * x + b * y * y - z * z) % pk[level];
        return v == 0;
    }

    /// (x, y, z) is a solution mod p^level; search all digit extensions.
    bool extend(const Int& x, const Int& y, const Int& z, std::size_t level) {
        if (level + 1 == pk.size()) return true;
        auto key = std::make_tuple(level, x, y, z);
        if (dead.count(key)) return false;
        const Int& step = pk[level];
        for (Int dx = 0; dx < p; ++dx)
            for (Int dy = 0; dy < p; ++dy)
                for (Int dz = 0; dz < p; ++dz) {
                    Int nx = x + dx * step, ny = y + dy * step, nz = z + dz * step;
                    if (!value_ok(nx, ny, nz, level + 1)) continue;
                    if (extend(nx, ny, nz, level + 1)) return true;
                }
        dead.insert(key);
        return false;
    }
};

} // namespace

int brute_hilbert(const Rat& ra, const Rat& rb, const Int& p) {
    Int a = squarefree_class(ra), b = squarefree_class(rb);
    long v = 0;
    {
        Int t = boost::multiprecision::abs(4 * a * b);
        while (t % p == 0) { t /= p; ++v; }
    }
    std::size_t k = static_cast<std::size_t>(2 * v + 3);
    LiftSearch s;
    s.a = a;
    s.b = b;
    s.p = p;
    s.pk.resize(k + 1);
    s.pk[0] = 1;
    for (std::size_t i = 1; i <= k; ++i) s.pk[i] = s.pk[i - 1] * p;
    for (Int x = 0; x < p; ++x)
        for (Int y = 0; y < p; ++y)
            for (Int z = 0; z < p; ++z) {
                if (x == 0 && y == 0 && z == 0) continue; // primitive triples only
                if (!s.value_ok(x, y, z, 1)) continue;
                if (s.extend(x, y, z, 1)) return 0; // solvable: split
            }
    return 1; // no primitive solution mod p^k: nonsplit
}

} // namespace k3cyclo::oracle
