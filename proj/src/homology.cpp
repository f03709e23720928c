#include "vcm/homology.hpp"

#include <map>

namespace vcm {

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (p < 2) throw invalid_input("field characteristic must be a prime");
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw invalid_input(std::to_string(p) + " is not prime");
    FieldSpec f;
    f.rational = false;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("gf:", 0) == 0) {
        try {
            std::size_t used = 0;
            long long p = std::stoll(text.substr(3), &used);
            if (used != text.size() - 3) throw invalid_input("bad field spec: " + text);
            return prime_field(p);
        } catch (const std::logic_error&) {
            throw invalid_input("bad field spec: " + text);
        }
    }
    throw invalid_input("bad field spec (want q or gf:<p>): " + text);
}

namespace {

// faces.first_degree = -1; faces.by_dim[k] holds the (k-1)-faces.
struct GradedFaces {
    std::vector<std::vector<Face>> by_dim;

    const std::vector<Face>& at(int d) const {
        static const std::vector<Face> none{};
        int idx = d + 1;
        if (idx < 0 || idx >= static_cast<int>(by_dim.size())) return none;
        return by_dim[static_cast<std::size_t>(idx)];
    }
};

GradedFaces grade(const SimplicialComplex& c) {
    GradedFaces g;
    if (c.is_void()) return g;
    g.by_dim.resize(static_cast<std::size_t>(c.dimension() + 2));
    for (Face f : c.all_faces()) g.by_dim[static_cast<std::size_t>(f.dim() + 1)].push_back(f);
    return g;
}

IntMatrix boundary_between(const std::vector<Face>& rows, const std::vector<Face>& cols) {
    std::map<Face, std::size_t, CanonicalFaceLess> rowindex;
    for (std::size_t i = 0; i < rows.size(); ++i) rowindex.emplace(rows[i], i);
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        int pos = 0;
        for (int v : cols[j].indices()) {
            auto it = rowindex.find(cols[j].without(v));
            if (it != rowindex.end()) m.at(it->second, j) = (pos % 2 == 0) ? 1 : -1;
            ++pos;
        }
    }
    return m;
}

} // namespace

IntMatrix boundary_matrix(const SimplicialComplex& complex, int d) {
    if (complex.is_void()) throw invalid_input("boundary matrix of the void complex");
    GradedFaces g = grade(complex);
    return boundary_between(g.at(d - 1), g.at(d));
}

HomologyVector reduced_homology(const SimplicialComplex& complex, const FieldSpec& field) {
    if (complex.is_void()) throw invalid_input("homology of the void complex");
    GradedFaces g = grade(complex);
    int dim = complex.dimension();
    auto rank_of = [&](int d) -> long {
        IntMatrix m = boundary_between(g.at(d - 1), g.at(d));
        if (m.rows() == 0 || m.cols() == 0) return 0;
        return static_cast<long>(field.rational ? rank_over_q(std::move(m)) : rank_mod_p(m, field.p));
    };
    HomologyVector h;
    h.first_degree = -1;
    std::vector<long> ranks(static_cast<std::size_t>(dim + 3), 0); // ranks[k] = rank ∂_{k-1}
    for (int d = -1; d <= dim + 1; ++d) ranks[static_cast<std::size_t>(d + 1)] = rank_of(d);
    for (int d = -1; d <= dim; ++d) {
        long faces = static_cast<long>(g.at(d).size());
        long kernel = faces - ranks[static_cast<std::size_t>(d + 1)];
        h.dims.push_back(kernel - ranks[static_cast<std::size_t>(d + 2)]);
    }
    return h;
}

IntegerHomologyVector relative_homology_z(const SimplicialComplex& complex, const SimplicialComplex& rel) {
    if (complex.is_void()) throw invalid_input("relative homology of the void complex");
    if (rel.vertices() != complex.vertices())
        throw invalid_input("relative subcomplex must share the ambient labeling");
    if (!subcomplex_of(rel, complex)) throw invalid_input("relative argument is not a subcomplex");

    // quotient chain groups: faces of Δ that are not faces of A
    GradedFaces g = grade(complex);
    int dim = complex.dimension();
    std::vector<std::vector<Face>> basis(static_cast<std::size_t>(dim + 2));
    for (int d = -1; d <= dim; ++d)
        for (Face f : g.at(d))
            if (!rel.contains(f)) basis[static_cast<std::size_t>(d + 1)].push_back(f);

    auto basis_at = [&](int d) -> const std::vector<Face>& {
        static const std::vector<Face> none{};
        int idx = d + 1;
        if (idx < 0 || idx >= static_cast<int>(basis.size())) return none;
        return basis[static_cast<std::size_t>(idx)];
    };

    IntegerHomologyVector out;
    out.first_degree = -1;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(dim + 3), 0);
    std::vector<std::vector<Integer>> factors(static_cast<std::size_t>(dim + 3));
    for (int d = -1; d <= dim + 1; ++d) {
        IntMatrix m = boundary_between(basis_at(d - 1), basis_at(d));
        if (m.rows() == 0 || m.cols() == 0) continue;
        std::vector<Integer> inv = smith_invariant_factors(std::move(m));
        ranks[static_cast<std::size_t>(d + 1)] = inv.size();
        factors[static_cast<std::size_t>(d + 1)] = std::move(inv);
    }
    for (int d = -1; d <= dim; ++d) {
        IntegerSummand s;
        long faces = static_cast<long>(basis_at(d).size());
        long kernel = faces - static_cast<long>(ranks[static_cast<std::size_t>(d + 1)]);
        s.free_rank = kernel - static_cast<long>(ranks[static_cast<std::size_t>(d + 2)]);
        for (const Integer& f : factors[static_cast<std::size_t>(d + 2)])
            if (f > 1) s.torsion.push_back(f);
        out.groups.push_back(std::move(s));
    }
    return out;
}

} // namespace vcm
