#include "vcm/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace vcm {

Monomial Monomial::squarefree(std::size_t nvars, Face support) {
    Monomial m(nvars);
    for (int v : support.indices()) m.exp.at(static_cast<std::size_t>(v)) = 1u;
    return m;
}

unsigned Monomial::total_degree() const {
    return std::accumulate(exp.begin(), exp.end(), 0u);
}

bool Monomial::is_unit() const {
    return std::all_of(exp.begin(), exp.end(), [](unsigned e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exp.begin(), exp.end(), [](unsigned e) { return e <= 1; });
}

Face Monomial::support() const {
    Face f;
    for (std::size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > 0) f.insert(static_cast<int>(i));
    return f;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > other.exp[i]) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.exp.size());
    for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
    return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m(a.exp.size());
    for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] = std::min(a.exp[i], b.exp[i]);
    return m;
}

Monomial Monomial::colon_by(const Monomial& g) const {
    Monomial m(exp.size());
    for (std::size_t i = 0; i < exp.size(); ++i) m.exp[i] = exp[i] - std::min(exp[i], g.exp[i]);
    return m;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // within a degree: lex with earlier variables larger, so x0*x1 lists
    // before x1*y0
    return a.exp > b.exp;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), monomial_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j] != gens[i] && gens[j].divides(gens[i])) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b, const char* op) {
    if (a.ring() != b.ring()) throw invalid_input(std::string(op) + " requires ideals in the same ring");
}

} // namespace

MonomialIdeal MonomialIdeal::from_generators(VertexLabeling ring, std::vector<Monomial> gens) {
    for (const Monomial& m : gens)
        if (static_cast<int>(m.nvars()) != ring.size())
            throw invalid_input("monomial variable count differs from the ring");
    MonomialIdeal ideal;
    ideal.ring_ = std::move(ring);
    ideal.gens_ = minimalize(std::move(gens));
    return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& g) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const Monomial& m : ideal.generators()) gens.push_back(m.colon_by(g));
    return MonomialIdeal::from_generators(ideal.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
    require_same_ring(ideal, by, "colon");
    if (by.is_zero()) throw invalid_input("colon by the zero ideal is undefined");
    bool first = true;
    MonomialIdeal acc;
    for (const Monomial& g : by.generators()) {
        MonomialIdeal part = colon(ideal, g);
        acc = first ? part : intersect_ideals(acc, part);
        first = false;
    }
    return acc;
}

MonomialIdeal intersect_ideals(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b, "intersection");
    std::vector<Monomial> gens;
    for (const Monomial& m : a.generators())
        for (const Monomial& g : b.generators()) gens.push_back(lcm(m, g));
    return MonomialIdeal::from_generators(a.ring(), std::move(gens));
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by) {
    require_same_ring(ideal, by, "saturation");
    if (by.is_zero()) throw invalid_input("saturation by the zero ideal is undefined");
    MonomialIdeal cur = ideal;
    while (true) {
        MonomialIdeal next = colon(cur, by);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

} // namespace vcm
