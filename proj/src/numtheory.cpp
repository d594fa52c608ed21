#include "k3cyclo/numtheory.hpp"

#include <boost/multiprecision/integer.hpp>

namespace k3cyclo {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Exact for n < 3.317e24 (Sorenson-Webster).
constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_u64(u64 n, u64 a) {
    a %= n;
    if (a == 0) return true; // witness collides with n itself
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

Int powmod_int(Int a, Int e, const Int& m) {
    Int r = 1;
    a %= m;
    if (a < 0) a += m;
    while (e > 0) {
        if (mod2(e)) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

bool miller_rabin_int(const Int& n, const Int& a) {
    if (a % n == 0) return true; // witness collides with a multiple of n
    Int d = n - 1;
    int s = 0;
    while (mod2(d) == 0) { d >>= 1; ++s; }
    Int x = powmod_int(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

Int pollard_brent(const Int& n, u64 seed) {
    // Brent's cycle variant of Pollard rho; n odd composite, not a prime power check done by caller loop.
    u64 state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    auto next_u64 = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (;;) {
        Int y = Int(next_u64()) % n;
        Int c = Int(next_u64()) % n;
        if (c == 0) c = 1;
        Int x = y, ys = y, d = 1, q = 1;
        unsigned long r = 1;
        const unsigned long step = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(step, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x > y ? Int(x - y) : Int(y - x);
                    if (diff != 0) q = q * diff % n;
                }
                d = boost::multiprecision::gcd(q, n);
                k += lim;
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack
            do {
                ys = (ys * ys + c) % n;
                Int diff = x > ys ? Int(x - ys) : Int(ys - x);
                d = boost::multiprecision::gcd(diff, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(Int n, std::map<Int, unsigned>& out, u64 seed) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_brent(n, seed);
    factor_rec(d, out, seed + 1);
    factor_rec(n / d, out, seed + 1);
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % p == 0) return n == p;
    for (u64 a : kWitnesses)
        if (!miller_rabin_u64(n, a)) return false;
    return true;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n <= Int(~0ULL)) return is_prime_u64(static_cast<u64>(n));
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % p == 0) return false;
    for (u64 a : kWitnesses)
        if (!miller_rabin_int(n, a)) return false;
    // Extra fixed witnesses for the (never hit in-domain) huge range.
    u64 w = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < 51; ++i) {
        w = w * 6364136223846793005ULL + 1442695040888963407ULL;
        if (!miller_rabin_int(n, Int(2 + w % 1000000007ULL))) return false;
    }
    return true;
}

std::map<Int, unsigned> factorize(Int n) {
    std::map<Int, unsigned> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (u64 p = 2; p < 100000 && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
        while (n % p == 0) {
            ++out[Int(p)];
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, out, 0x6b3363ull);
    return out;
}

std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

int legendre(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    Int e = powmod_int(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

long valuation(const Rat& a, const Int& p) {
    if (a == 0) throw std::domain_error("valuation: zero argument");
    Int num = boost::multiprecision::numerator(a);
    Int den = boost::multiprecision::denominator(a);
    long v = 0;
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    return v;
}

} // namespace k3cyclo
