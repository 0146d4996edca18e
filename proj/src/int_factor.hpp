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

#ifndef CHARPROJ_INT_FACTOR_HPP
#define CHARPROJ_INT_FACTOR_HPP

#include <gmpxx.h>

#include <vector>

namespace charproj::detail {

/// Prime factorization of n >= 1 (unsorted, with repetitions), via trial
/// division and Pollard-Brent rho with Miller-Rabin certification.
std::vector<mpz_class> prime_factors(mpz_class n);

/// All positive divisors of n >= 1, ascending.
std::vector<mpz_class> divisors(const mpz_class& n);

} // namespace charproj::detail

#endif
