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

#ifndef CHARPROJ_FIXTURE_CHECKS_HPP
#define CHARPROJ_FIXTURE_CHECKS_HPP

#include <string>
#include <vector>

#include "charproj/decomp.hpp"

/**
 * Reference dataset and its regression checks.
 *
 * The bundled fixtures describe a worked modular-forms example: the Hecke
 * operator T3 on the 7-dimensional new cuspidal subspace at level 30, its
 * recombination into the 9-dimensional ambient space (with the change of
 * basis into the Miller q-expansion basis), and the characteristic
 * projectors for the U3 eigenvalue -1 at tower levels 30 and 90.
 *
 * The expected values here are frozen as independent in-code constants;
 * `run_fixture_checks` re-derives everything the engine can derive and
 * compares the fixture files against these constants, so a perturbed
 * fixture or a regressed algorithm both surface as failures.
 */
namespace charproj::fixtures {

// level-30 data: T3 on the 7-dimensional new subspace
Matrix t3_level30();
Polynomial t3_charpoly();          // also its minimal polynomial
Polynomial t3_projection_poly();   // projection polynomial for eigenvalue 1
Matrix t3_projector();

// the 9-dimensional ambient space: two lines where T3 acts by -1, plus the
// 7-dimensional block, glued by the change of basis into the Miller basis
std::vector<std::string> level30_block_labels();
Matrix level30_change_of_basis();
Matrix level30_adapted_projector();        // block-diagonal coordinates
Matrix miller_basis_projector();           // ambient (Miller) coordinates
Polynomial level30_ambient_projection_poly();

// tower data: projectors for eigenvalue -1 of U3
Polynomial floor30_annihilator();          // (X+1)^2 (X-1)
Polynomial floor30_projection_poly();
Matrix floor30_projector();                // 3x3, trace 2
Polynomial level90_annihilator();          // X^8 (X+1)^2 (X-1)
Polynomial level90_projection_poly();
Matrix level90_projector();                // 11x11, trace 2

struct CheckLine {
    std::string name;
    bool ok;
    std::string detail;
};

/// Names of the fixture files every check run expects to find.
const std::vector<std::string>& required_files();

/// Verify every fixture file under `dir`. One line per fixture; a missing
/// file is a failure, never a skip.
std::vector<CheckLine> run_fixture_checks(const std::string& dir);

bool all_passed(const std::vector<CheckLine>& lines);

} // namespace charproj::fixtures

#endif
