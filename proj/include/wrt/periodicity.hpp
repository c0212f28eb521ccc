#pragma once

// Periodicity obstruction: an r-periodic integral homology sphere M has
// eta*tau(M) = xi^s conj(eta*tau(M)) mod r for some s. An empty witness set
// rules out r-periodicity; a nonempty one decides nothing.

#include "wrt/diagram.hpp"
#include "wrt/invariant.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wrt {

struct PeriodicityEntry {
    int r = 0;
    CyclotomicInteger projective;
    std::vector<int> witnesses;
    bool obstructed() const { return witnesses.empty(); }
    std::string verdict() const { return obstructed() ? "obstructed" : "consistent-with-periodicity"; }
};

struct PeriodicityReport {
    std::string manifold;
    std::vector<PeriodicityEntry> entries;
};

class NotHomologySphere : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline PeriodicityReport periodicity_scan(const std::string& name, const FramedLinkPresentation& p,
                                          const std::vector<int>& primes, unsigned workers = 1, long w = 0) {
    const LinkingData lk = linking_matrix(p);
    if (abs(lk.det) != 1)
        throw NotHomologySphere(name + " is not an integral homology sphere (det of linking matrix = " + lk.det.get_str() + ")");
    PeriodicityReport rep{name, {}};
    for (int r : primes) {
        InvariantContext ctx(r, 1, workers);
        const TauResult t = projective_invariant(p, ctx, w);
        if (t.value.e() != 0) throw std::invalid_argument("periodicity_scan: odd weight leaves a kappa factor");
        PeriodicityEntry e;
        e.r = r;
        e.projective = t.value.c().as_integer();
        e.witnesses = congruence_test(e.projective);
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace wrt
