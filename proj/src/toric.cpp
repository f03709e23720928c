#include "vcm/toric.hpp"

#include <algorithm>

namespace vcm {

ToricContext ToricContext::make(VertexLabeling vertices, std::vector<std::vector<int>> blocks) {
    ToricContext ctx;
    int n = vertices.size();
    if (blocks.empty()) throw invalid_input("toric context needs at least one factor");
    ctx.block_of_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw invalid_input("empty factor block");
        std::sort(blocks[b].begin(), blocks[b].end());
        Face bf;
        for (int v : blocks[b]) {
            if (v < 0 || v >= n) throw invalid_input("block vertex index outside the labeling");
            if (ctx.block_of_[static_cast<std::size_t>(v)] != -1)
                throw invalid_input("vertex assigned to two factor blocks");
            ctx.block_of_[static_cast<std::size_t>(v)] = static_cast<int>(b);
            bf.insert(v);
        }
        ctx.block_faces_.push_back(bf);
    }
    for (int v = 0; v < n; ++v)
        if (ctx.block_of_[static_cast<std::size_t>(v)] == -1)
            throw invalid_input("vertex " + vertices.label(v) + " belongs to no factor block");
    ctx.vertices_ = std::move(vertices);
    ctx.blocks_ = std::move(blocks);
    return ctx;
}

bool ToricContext::is_relevant(Face f) const {
    for (Face bf : block_faces_)
        if (!f.intersects(bf)) return false;
    return true;
}

SimplicialComplex ToricContext::irrelevant_complex() const {
    Face all = Face::full(vertices_.size());
    std::vector<Face> gen;
    gen.reserve(block_faces_.size());
    for (Face bf : block_faces_) gen.push_back(all - bf);
    return SimplicialComplex::from_generators(vertices_, std::move(gen));
}

MonomialIdeal ToricContext::irrelevant_ideal() const {
    // transversal products, one variable per block, in block-nested order
    std::vector<Monomial> gens;
    std::vector<std::size_t> pick(blocks_.size(), 0);
    while (true) {
        Face supp;
        for (std::size_t b = 0; b < blocks_.size(); ++b) supp.insert(blocks_[b][pick[b]]);
        gens.push_back(Monomial::squarefree(static_cast<std::size_t>(vertices_.size()), supp));
        std::size_t b = blocks_.size();
        while (b > 0) {
            --b;
            if (++pick[b] < blocks_[b].size()) break;
            pick[b] = 0;
            if (b == 0) return MonomialIdeal::from_generators(vertices_, std::move(gens));
        }
    }
}

ToricContext ToricContext::drop_vertex(int v) const {
    if (v < 0 || v >= vertices_.size()) throw invalid_input("drop of an index outside the labeling");
    int b = block_of_[static_cast<std::size_t>(v)];
    if (blocks_[static_cast<std::size_t>(b)].size() == 1)
        throw invalid_input("dropping " + vertices_.label(v) + " would empty a factor block");
    std::vector<std::string> labels;
    for (int u = 0; u < vertices_.size(); ++u)
        if (u != v) labels.push_back(vertices_.label(u));
    std::vector<std::vector<int>> nb(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (int u : blocks_[i])
            if (u != v) nb[i].push_back(u > v ? u - 1 : u);
    return make(VertexLabeling(std::move(labels)), std::move(nb));
}

} // namespace vcm
