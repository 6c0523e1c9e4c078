#include "khl/module.hpp"

#include <unordered_set>

namespace khl {

static Label make_label(LabelKind kind, std::vector<Label> parts) {
    auto n = std::make_shared<LabelNode>();
    n->kind = kind;
    n->parts = std::move(parts);
    return n;
}

Label atom(const std::string& name) {
    auto n = std::make_shared<LabelNode>();
    n->kind = LabelKind::Atom;
    n->name = name;
    return n;
}

Label tuple_label(std::vector<Label> parts) { return make_label(LabelKind::Tuple, std::move(parts)); }
Label multiset_label(std::vector<Label> parts) { return make_label(LabelKind::Multiset, std::move(parts)); }
Label wedge_label(std::vector<Label> parts) { return make_label(LabelKind::Wedge, std::move(parts)); }

Label gamma_label(int k, std::vector<int> steps, Label inner) {
    auto n = std::make_shared<LabelNode>();
    n->kind = LabelKind::Gamma;
    n->index = k;
    n->steps = std::move(steps);
    n->parts = {std::move(inner)};
    return n;
}

Label summand_label(int i, Label inner) {
    auto n = std::make_shared<LabelNode>();
    n->kind = LabelKind::Summand;
    n->index = i;
    n->parts = {std::move(inner)};
    return n;
}

std::string label_str(const Label& l) {
    auto join = [&](const char* open, const char* sep, const char* close) {
        std::string s = open;
        for (size_t i = 0; i < l->parts.size(); ++i) {
            if (i) s += sep;
            s += label_str(l->parts[i]);
        }
        return s + close;
    };
    switch (l->kind) {
        case LabelKind::Atom: return l->name;
        case LabelKind::Tuple: return join("(", "⊗", ")");
        case LabelKind::Multiset: return join("[", "·", "]");
        case LabelKind::Wedge: return join("(", "∧", ")");
        case LabelKind::Gamma: {
            std::string s = "<" + std::to_string(l->index) + ";{";
            for (size_t i = 0; i < l->steps.size(); ++i) s += (i ? "," : "") + std::to_string(l->steps[i]);
            return s + "};" + label_str(l->parts[0]) + ">";
        }
        case LabelKind::Summand: return std::to_string(l->index) + ":" + label_str(l->parts[0]);
    }
    return "?";
}

bool label_equal(const Label& a, const Label& b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->name != b->name || a->index != b->index || a->steps != b->steps ||
        a->parts.size() != b->parts.size())
        return false;
    for (size_t i = 0; i < a->parts.size(); ++i)
        if (!label_equal(a->parts[i], b->parts[i])) return false;
    return true;
}

BasedFreeModule::BasedFreeModule(Ring ring, std::vector<Label> basis, std::vector<int> degrees)
    : ring_(std::move(ring)), basis_(std::move(basis)), degrees_(std::move(degrees)) {
    if (degrees_.empty()) degrees_.assign(basis_.size(), 0);
    if (degrees_.size() != basis_.size()) throw DimensionMismatch("degree list length");
    if (!ring_.is_graded())
        for (int d : degrees_)
            if (d != 0) throw InvalidArgument("internal degrees need a graded ring");
}

void BasedFreeModule::validate() const {
    std::unordered_set<std::string> seen;
    for (const auto& l : basis_)
        if (!seen.insert(label_str(l)).second) throw ValidationError("duplicate basis label " + label_str(l));
}

Module make_module(Ring ring, std::vector<Label> basis, std::vector<int> degrees) {
    return std::make_shared<const BasedFreeModule>(std::move(ring), std::move(basis), std::move(degrees));
}

Module free_module(const Ring& ring, int rank, const std::string& prefix, std::vector<int> degrees) {
    std::vector<Label> basis;
    for (int i = 0; i < rank; ++i) basis.push_back(atom(prefix + std::to_string(i + 1)));
    return make_module(ring, std::move(basis), std::move(degrees));
}

Module zero_module(const Ring& ring) { return make_module(ring, {}); }

Module twist(const Module& v, int s) {
    auto d = v->degrees();
    for (auto& x : d) x += s;
    return make_module(v->ring(), v->basis(), d);
}

bool same_shape(const Module& a, const Module& b) {
    return a->ring() == b->ring() && a->rank() == b->rank() && a->degrees() == b->degrees();
}

ModuleMap::ModuleMap(Module dom, Module cod, SparseMatrix matrix)
    : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(matrix)) {
    if (dom_->ring() != cod_->ring() || matrix_.ring() != dom_->ring()) throw MixedRings("module map");
    if (matrix_.rows() != cod_->rank() || matrix_.cols() != dom_->rank())
        throw DimensionMismatch("module map matrix is " + std::to_string(matrix_.rows()) + "x" +
                                std::to_string(matrix_.cols()) + ", expected " +
                                std::to_string(cod_->rank()) + "x" + std::to_string(dom_->rank()));
    if (dom_->graded()) check_homogeneous(matrix_, cod_->degrees(), dom_->degrees());
}

ModuleMap ModuleMap::operator*(const ModuleMap& o) const {
    if (o.cod_->rank() != dom_->rank()) throw DimensionMismatch("composition");
    return {o.dom_, cod_, matrix_ * o.matrix_};
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const { return {dom_, cod_, matrix_ + o.matrix_}; }
ModuleMap ModuleMap::operator-(const ModuleMap& o) const { return {dom_, cod_, matrix_ - o.matrix_}; }
ModuleMap ModuleMap::scaled(const Scalar& s) const { return {dom_, cod_, matrix_.scaled(s)}; }

ModuleMap identity_map(const Module& v) { return {v, v, SparseMatrix::identity(v->ring(), v->rank())}; }

ModuleMap zero_map(const Module& dom, const Module& cod) {
    return {dom, cod, SparseMatrix(dom->ring(), cod->rank(), dom->rank())};
}

ModuleMap map_from_ints(const Module& dom, const Module& cod, const std::vector<std::vector<long>>& rows) {
    SparseMatrix m(dom->ring(), cod->rank(), dom->rank());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j]) m.set(static_cast<int>(i), static_cast<int>(j), dom->ring().from_int(rows[i][j]));
    return {dom, cod, m};
}

DirectSum direct_sum(const std::vector<Module>& parts) {
    if (parts.empty()) throw InvalidArgument("direct sum of an empty list needs a ring");
    return direct_sum(parts[0]->ring(), parts);
}

DirectSum direct_sum(const Ring& R, const std::vector<Module>& parts) {
    std::vector<Label> basis;
    std::vector<int> degrees;
    std::vector<int> offsets;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i]->ring() != R) throw MixedRings("direct_sum");
        offsets.push_back(static_cast<int>(basis.size()));
        for (int b = 0; b < parts[i]->rank(); ++b) {
            basis.push_back(summand_label(static_cast<int>(i) + 1, parts[i]->label(b)));
            degrees.push_back(parts[i]->degree(b));
        }
    }
    DirectSum out;
    out.sum = make_module(R, basis, degrees);
    for (size_t i = 0; i < parts.size(); ++i) {
        SparseMatrix in(R, out.sum->rank(), parts[i]->rank());
        for (int b = 0; b < parts[i]->rank(); ++b) in.set(offsets[i] + b, b, R.one());
        out.inj.emplace_back(parts[i], out.sum, in);
        out.proj.emplace_back(out.sum, parts[i], in.transpose());
    }
    return out;
}

ModuleMap direct_sum_map(const std::vector<ModuleMap>& maps) {
    std::vector<Module> doms, cods;
    std::vector<SparseMatrix> blocks;
    for (const auto& m : maps) {
        doms.push_back(m.dom());
        cods.push_back(m.cod());
        blocks.push_back(m.matrix());
    }
    return {direct_sum(doms).sum, direct_sum(cods).sum, block_diag(blocks)};
}

Module tensor_product(const Module& a, const Module& b) {
    if (a->ring() != b->ring()) throw MixedRings("tensor_product");
    std::vector<Label> basis;
    std::vector<int> degrees;
    for (int i = 0; i < a->rank(); ++i)
        for (int j = 0; j < b->rank(); ++j) {
            basis.push_back(tuple_label({a->label(i), b->label(j)}));
            degrees.push_back(a->degree(i) + b->degree(j));
        }
    return make_module(a->ring(), basis, degrees);
}

ModuleMap tensor_map(const ModuleMap& f, const ModuleMap& g) {
    if (f.ring() != g.ring()) throw MixedRings("tensor_map");
    return {tensor_product(f.dom(), g.dom()), tensor_product(f.cod(), g.cod()), kron(f.matrix(), g.matrix())};
}

}  // namespace khl
