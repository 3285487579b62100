#pragma once

#include <string>
#include <vector>

#include "kpn/base.hpp"
#include "kpn/coeff.hpp"

namespace kpn {

struct CheckResult {
    std::string name;
    bool pass = false;
    long long cases = 0;          // how many instances were exercised
    std::string counterexample;   // first failure, empty when passing
    double seconds = 0;
};

// A verification job: base complex, coefficient group pi, degree n, and the
// obstruction cocycle. Defaults to the boundary of the tetrahedron with the
// one-triangle cocycle mod 2.
struct VerifyInstance {
    BaseComplex K;
    CoeffGroup pi = CoeffGroup::mod(2);
    int n = 1;
    BaseCochain z;
    size_t cap = 1000000;
    unsigned seed = 1;
    long long trials = 200;
    bool corrupt_sign = false;  // negative-control switch for route equality
    int max_degree = 3;
};

VerifyInstance default_instance(long long modulus = 2);

// d_A a(z) = a(z) a(z) and beta(a(z)) = z for a generated family of cocycles
// over the base and over its prism complexes.
CheckResult check_twisting(const VerifyInstance& inst);

// d_A u = a(z+dc) - a(z) + u a(z+dc) - a(z) u, exactly, for random c.
CheckResult check_lemma_4_2(const VerifyInstance& inst);

// d_A v = u01 + u12 + u01 u12 - u02 + a(z_0) v + v a(z_2), exactly.
CheckResult check_lemma_7_1(const VerifyInstance& inst);

// boundary via cubical faces == tensor differential + module action of a(z)
CheckResult check_route_equality(const VerifyInstance& inst);

// phi chain isomorphisms, identity of u(0,z) and u(delta b,z) on homology,
// additivity of the cocycle action on homology
CheckResult check_action_laws(const VerifyInstance& inst);

// cubical face/degeneracy identities on randomized cubes
CheckResult check_cubical_identities(const VerifyInstance& inst);

// the four kappa face compatibilities on randomized simplices and cocycles
CheckResult check_kappa_properties(const VerifyInstance& inst);

// prism operator identities on every simplex of the base
CheckResult check_prism_identities(const VerifyInstance& inst);

// cup product ring axioms and Leibniz over Z/3; polynomial generator at the point
CheckResult check_cup_suite(const VerifyInstance& inst);

std::vector<std::string> all_check_names();
CheckResult run_check(const std::string& name, const VerifyInstance& inst);

}  // namespace kpn
