/*
   Copyright 2026 The charproj authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "int_factor.hpp"

#include <algorithm>

namespace charproj::detail {

namespace {

bool is_prime(const mpz_class& n) {
    // 40 Miller-Rabin rounds; composite results are certain, prime results
    // are certain for our sizes in practice.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// Pollard-Brent rho; n must be composite, odd, > 1. Returns a nontrivial factor.
mpz_class rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0xC0FFEEUL); // fixed seed: factoring stays deterministic
    while (true) {
        mpz_class y = rng.get_z_range(n - 3) + 2;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class x = y, ys = y, q = 1, g = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(m, static_cast<unsigned long>(r - k));
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                mpz_class d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
        // bad cycle, retry with fresh parameters
    }
}

void factor_into(mpz_class n, std::vector<mpz_class>& out) {
    if (n <= 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    mpz_class d = rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<mpz_class> prime_factors(mpz_class n) {
    std::vector<mpz_class> out;
    if (n <= 1) return out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            out.emplace_back(p);
            n /= p;
        }
    }
    // continue trial division a bit before handing over to rho
    for (long p = 41; p < 10000 && n > 1; p += 2) {
        while (n % p == 0) {
            out.emplace_back(p);
            n /= p;
        }
    }
    factor_into(n, out);
    return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> primes = prime_factors(n);
    std::sort(primes.begin(), primes.end());
    std::vector<mpz_class> out = {1};
    std::size_t i = 0;
    while (i < primes.size()) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        const std::size_t mult = j - i;
        const std::size_t base = out.size();
        mpz_class pk = 1;
        for (std::size_t e = 1; e <= mult; ++e) {
            pk *= primes[i];
            for (std::size_t t = 0; t < base; ++t) out.push_back(out[t] * pk);
        }
        i = j;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace charproj::detail
