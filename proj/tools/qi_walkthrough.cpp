// Library usage walkthrough: builds two instances programmatically and
// prints every verdict. Run it from anywhere; it takes no arguments.

#include <iostream>

#include "qinv/qinv.hpp"

using namespace qinv;

namespace {

template <commutative_ring R>
void show(const std::string& name, const QiReport<R>& rep) {
    std::cout << "  " << name << ": " << to_string(rep.verdict) << "\n";
    for (const auto& p : rep.preconditions)
        std::cout << "    - " << p.name << " [" << Precondition::status_string(p.status) << "]\n";
    if (rep.witness && rep.witness->witness_k)
        std::cout << "    witness K = " << rep.witness->witness_k->to_string() << "\n";
}

}  // namespace

int main() {
    // An integer instance where QI holds yet the adjugate image escapes the
    // module: the (1,1) slot of S only admits even entries, and 2 has no
    // inverse in Z.
    std::cout << "integer instance over Z\n";
    const IntRing z;
    auto g = parse_matrix(z, {{"0", "0", "0"}, {"0", "0", "1"}, {"0", "1", "0"}});
    auto s = ControllerSet<IntRing>::from_generators(
        z, {parse_matrix(z, {{"2", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}}),
            parse_matrix(z, {{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "0"}}),
            parse_matrix(z, {{"0", "0", "1"}, {"0", "1", "0"}, {"1", "0", "0"}})});
    show("check_qi", check_qi(g, s));
    show("adjugate_invariance", adjugate_invariance(g, s));
    show("h_invariance", h_invariance(g, s));

    // Two plants whose controllers talk over a network with one unit of
    // delay: entrywise delay bounds over Q(s,d) with properness in s and d.
    std::cout << "\ndelay network over Q(s,d)_p\n";
    ProperRatRing sd({}, {"s", "d"});
    auto plant = parse_matrix(sd, {{"1/(s*d+s+d+1)", "0"}, {"0", "1/(s*d+s+d+1)"}});
    auto delay_set = ControllerSet<ProperRatRing>::delay_bounds(sd, "d", {{0, 1}, {1, 0}});
    show("check_qi", check_qi(plant, delay_set));
    show("h_invariance", h_invariance(plant, delay_set));

    auto eye = Matrix<ProperRatRing>::identity(sd, 2);
    auto cl = closed_loop_set(Matrix<ProperRatRing>(sd, 2, 2), eye, eye, plant, delay_set);
    if (cl.set) {
        std::cout << "  closed-loop offset = " << cl.set->offset.to_string() << "\n";
        for (std::size_t i = 0; i < cl.set->images.size(); ++i)
            std::cout << "  closed-loop image " << (i + 1) << " = " << cl.set->images[i].to_string() << "\n";
    }

    // The feedback involution on a scalar plant.
    std::cout << "\nscalar h map over Q(s)_p\n";
    ProperRatRing sp({}, {"s"});
    auto gs = parse_matrix(sp, {{"1/s"}});
    auto k = parse_matrix(sp, {{"1"}});
    auto h = std::get<Matrix<ProperRatRing>>(h_map(k, gs));
    std::cout << "  h(1) = " << sp.to_string(h.at(0, 0)) << "\n";
    auto hh = std::get<Matrix<ProperRatRing>>(h_map(h, gs));
    std::cout << "  h(h(1)) = " << sp.to_string(hh.at(0, 0)) << "\n";
    return 0;
}
