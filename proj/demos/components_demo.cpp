/* Walkthrough: the character variety of the commutator-like group
 *
 *     G = <a, b | a^2 b^3 a^-2 b^-3>
 *
 * The variety of SL2 characters decomposes into at most ten candidate
 * components.  For this presentation five are nonempty; the demo prints
 * each component's dimension, shows a concrete piece of the big
 * two-dimensional family, and finishes with the intersection graph of the
 * generically irreducible locus.
 */

#include "sl2cv/classifier.hpp"

#include <cstdio>

using namespace sl2cv;

int main() {
    const GroupPresentation p{2, 3, -2, -3};
    std::printf("group <a, b | a^%lld b^%lld a^%lld b^%lld>\n\n", p.n1, p.m1, p.n2, p.m2);

    std::printf("trace-sum invariants: s = n1 - n2 = %lld, t = m1 - m2 = %lld\n\n", p.s(),
                p.t());

    const auto reports = classify_all(p);
    for (const ComponentReport& r : reports) {
        std::printf("component %2d: dim %-5s", r.id, to_string(r.dim).c_str());
        if (r.dim != ComponentDim::empty)
            std::printf("  (orbits: %lld, irreducible points: %s)",
                        static_cast<long long>(r.orbit_count),
                        r.gen_irr_nonempty ? "yes" : "no");
        std::printf("\n");
    }

    // a closer look at the first component: A^2 = -I pins tr A = 0, while
    // tr B and tr AB remain free — a two-dimensional family of characters
    const ComponentReport& c1 = reports[0];
    if (c1.dim == ComponentDim::dim2 && !c1.pieces.empty()) {
        const ComponentPiece& pc = c1.pieces.front();
        std::printf("\ncomponent 1 generic piece: x %s, y %s, z %s\n",
                    pc.x_fixed ? "fixed" : "free", pc.y_fixed ? "fixed" : "free",
                    pc.z_fixed ? "fixed" : "free");
    }

    const IntersectionGraph g = intersection_graph(p);
    std::printf("\nintersection graph of the generically irreducible locus:\n  nodes:");
    for (int n : g.nodes) std::printf(" %d", n);
    std::printf("\n  edges:");
    if (g.edges.empty()) std::printf(" none");
    for (const auto& [a, b] : g.edges) std::printf(" (%d,%d)", a, b);
    std::printf("\n");

    return 0;
}
