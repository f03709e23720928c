#include "vcm/complex.hpp"

#include <set>

namespace vcm {

namespace {

// Drop faces contained in another list entry, then sort canonically.
std::vector<Face> maximalize(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), CanonicalFaceLess{});
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < faces.size() && !dominated; ++j)
            if (i != j && faces[i] != faces[j] && faces[i].subset_of(faces[j])) dominated = true;
        if (!dominated) out.push_back(faces[i]);
    }
    return out;
}

} // namespace

SimplicialComplex SimplicialComplex::from_generators(VertexLabeling vertices, std::vector<Face> generators) {
    int n = vertices.size();
    for (Face f : generators)
        if (!f.subset_of(Face::full(n))) throw invalid_input("facet uses a vertex index outside the labeling");
    SimplicialComplex c;
    c.vertices_ = std::move(vertices);
    c.facets_ = maximalize(std::move(generators));
    return c;
}

SimplicialComplex SimplicialComplex::from_facet_indices(VertexLabeling vertices,
                                                        const std::vector<std::vector<int>>& facets) {
    std::vector<Face> gen;
    gen.reserve(facets.size());
    for (const auto& fv : facets) {
        for (std::size_t i = 1; i < fv.size(); ++i)
            if (fv[i - 1] >= fv[i]) throw invalid_input("facet vertex list must be strictly increasing");
        gen.push_back(Face::from_indices(fv));
    }
    return from_generators(std::move(vertices), std::move(gen));
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true; // vacuously
    return facets_.front().dim() == facets_.back().dim();
}

bool SimplicialComplex::contains(Face f) const {
    for (Face g : facets_)
        if (f.subset_of(g)) return true;
    return false;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::set<Face, CanonicalFaceLess> seen;
    for (Face g : facets_) {
        // enumerate subsets of g via the standard submask walk
        std::uint64_t m = g.bits();
        std::uint64_t s = m;
        while (true) {
            seen.insert(Face(s));
            if (s == 0) break;
            s = (s - 1) & m;
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Face> SimplicialComplex::faces_of_dim(int d) const {
    std::vector<Face> out;
    for (Face f : all_faces())
        if (f.dim() == d) out.push_back(f);
    return out;
}

Face SimplicialComplex::support() const {
    Face s;
    for (Face g : facets_) s = s | g;
    return s;
}

SimplicialComplex SimplicialComplex::link(Face g) const {
    if (!contains(g)) throw invalid_input("link of a non-face");
    std::vector<Face> gen;
    for (Face f : facets_)
        if (g.subset_of(f)) gen.push_back(f - g);
    return from_generators(vertices_, std::move(gen));
}

SimplicialComplex SimplicialComplex::restriction(Face sigma) const {
    if (!sigma.subset_of(Face::full(vertices_.size())))
        throw invalid_input("restriction set outside the labeling");
    std::vector<Face> gen;
    for (Face f : facets_) gen.push_back(f & sigma);
    // restriction of the void complex stays void
    if (facets_.empty()) gen.clear();
    SimplicialComplex ambient = from_generators(vertices_, std::move(gen));
    return ambient.relabel_onto(sigma);
}

SimplicialComplex SimplicialComplex::relabel_onto(Face keep) const {
    std::vector<std::string> labels;
    std::vector<int> newindex(static_cast<std::size_t>(vertices_.size()), -1);
    for (int v : keep.indices()) {
        newindex[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
        labels.push_back(vertices_.label(v));
    }
    std::vector<Face> gen;
    for (Face f : facets_) {
        if (!f.subset_of(keep)) throw invalid_input("relabeling drops a used vertex");
        Face g;
        for (int v : f.indices()) g.insert(newindex[static_cast<std::size_t>(v)]);
        gen.push_back(g);
    }
    return from_generators(VertexLabeling(std::move(labels)), std::move(gen));
}

SimplicialComplex closure_complex(const VertexLabeling& vertices, const std::vector<Face>& faces) {
    return SimplicialComplex::from_generators(vertices, faces);
}

namespace {
void require_same_labeling(const SimplicialComplex& a, const SimplicialComplex& b, const char* op) {
    if (a.vertices() != b.vertices())
        throw invalid_input(std::string(op) + " requires complexes on the same labeled vertex set");
}
} // namespace

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
    require_same_labeling(a, b, "intersection");
    std::vector<Face> gen;
    for (Face f : a.facets())
        for (Face g : b.facets()) gen.push_back(f & g);
    return SimplicialComplex::from_generators(a.vertices(), std::move(gen));
}

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
    require_same_labeling(a, b, "union");
    std::vector<Face> gen = a.facets();
    gen.insert(gen.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex::from_generators(a.vertices(), std::move(gen));
}

bool subcomplex_of(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (Face f : a.facets())
        if (!b.contains(f)) return false;
    return true;
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<int> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
    if (static_cast<int>(map_.size()) != source_.vertices().size())
        throw invalid_input("vertex map length differs from the source vertex count");
    int nt = target_.vertices().size();
    for (int t : map_)
        if (t < 0 || t >= nt) throw invalid_input("vertex map hits an index outside the target labeling");
    for (Face f : source_.facets()) {
        Face img;
        for (int v : f.indices()) img.insert(map_[static_cast<std::size_t>(v)]);
        if (!target_.contains(img)) throw invalid_input("not a simplicial map: a facet image is not a face of the target");
    }
}

Face SimplicialMap::image(Face f) const {
    if (!source_.contains(f)) throw invalid_input("image of a non-face of the source");
    Face img;
    for (int v : f.indices()) img.insert(map_[static_cast<std::size_t>(v)]);
    return img;
}

std::vector<Face> SimplicialMap::fiber(Face f) const {
    if (!target_.contains(f)) throw invalid_input("fiber of a non-face of the target");
    // Only faces supported on preimage vertices can map onto f, so enumerate
    // the source restricted there instead of the whole source.
    Face pre;
    for (std::size_t v = 0; v < map_.size(); ++v)
        if (f.contains(map_[v])) pre.insert(static_cast<int>(v));
    std::vector<Face> candidates;
    for (Face g : source_.facets()) candidates.push_back(g & pre);
    SimplicialComplex restricted = SimplicialComplex::from_generators(source_.vertices(), std::move(candidates));
    std::vector<Face> out;
    for (Face g : restricted.all_faces()) {
        Face img;
        for (int v : g.indices()) img.insert(map_[static_cast<std::size_t>(v)]);
        if (img == f) out.push_back(g);
    }
    return out;
}

std::optional<Face> SimplicialMap::dimension_drop_witness() const {
    for (Face f : source_.facets()) {
        Face img;
        for (int v : f.indices()) img.insert(map_[static_cast<std::size_t>(v)]);
        if (img.size() != f.size()) return f;
    }
    return std::nullopt;
}

std::optional<Face> SimplicialMap::surjectivity_gap() const {
    for (Face f : target_.facets())
        if (fiber(f).empty()) return f;
    return std::nullopt;
}

} // namespace vcm
