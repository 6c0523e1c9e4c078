#include "khl/functors.hpp"

#include <algorithm>
#include <map>

namespace khl {

FunctorTag FunctorTag::parse(const std::string& s) {
    auto num = [&](size_t from) {
        if (from >= s.size()) throw ParseError("functor tag '" + s + "' has no degree");
        for (size_t i = from; i < s.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad functor tag '" + s + "'");
        return std::stoi(s.substr(from));
    };
    if (s.rfind("Sym", 0) == 0) return sym(num(3));
    if (s.rfind("Ext", 0) == 0) return ext(num(3));
    if (s.rfind("Div", 0) == 0) return div(num(3));
    if (s.rfind("T", 0) == 0) return tensor(num(1));
    throw ParseError("unknown functor tag '" + s + "'");
}

std::string FunctorTag::name() const {
    switch (kind) {
        case FunctorKind::Sym: return "Sym" + std::to_string(n);
        case FunctorKind::Ext: return "Ext" + std::to_string(n);
        case FunctorKind::Div: return "Div" + std::to_string(n);
        case FunctorKind::Tensor: return "T" + std::to_string(n);
    }
    return "?";
}

std::vector<Word> functor_words(FunctorTag f, int rank) {
    std::vector<Word> out;
    Word w(f.n);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == f.n) {
            out.push_back(w);
            return;
        }
        for (int v = lo; v < rank; ++v) {
            w[pos] = v;
            switch (f.kind) {
                case FunctorKind::Sym:
                case FunctorKind::Div: rec(pos + 1, v); break;
                case FunctorKind::Ext: rec(pos + 1, v + 1); break;
                case FunctorKind::Tensor: rec(pos + 1, 0); break;
            }
        }
    };
    rec(0, 0);
    return out;
}

mpz_class functor_rank(FunctorTag f, int r) {
    mpz_class out;
    switch (f.kind) {
        case FunctorKind::Sym:
        case FunctorKind::Div:
            if (r == 0) return f.n == 0 ? 1 : 0;
            mpz_bin_uiui(out.get_mpz_t(), r + f.n - 1, f.n);
            return out;
        case FunctorKind::Ext:
            if (f.n > r) return 0;
            mpz_bin_uiui(out.get_mpz_t(), r, f.n);
            return out;
        case FunctorKind::Tensor:
            mpz_ui_pow_ui(out.get_mpz_t(), r, f.n);
            return out;
    }
    return 0;
}

WordIndex::WordIndex(const std::vector<Word>& words) {
    index_.reserve(words.size());
    for (size_t i = 0; i < words.size(); ++i) index_.emplace(words[i], static_cast<int>(i));
}

int WordIndex::find(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
}

int permutation_sign(std::vector<int> p) {
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i)
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[p[i]]);
            sign = -sign;
        }
    return sign;
}

// Sorts w in place, returning the sign of the sorting permutation (0 on a repeat).
static int sort_with_sign(Word& w) {
    int sign = 1;
    for (size_t i = 1; i < w.size(); ++i)
        for (size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
            if (w[j - 1] == w[j]) return 0;
            std::swap(w[j - 1], w[j]);
            sign = -sign;
        }
    return sign;
}

void expand_word(FunctorTag f, const Ring& R, const Word& src,
                 const std::function<const SparseVec&(int)>& col,
                 const std::function<void(const Word&, const Scalar&)>& emit) {
    const int n = static_cast<int>(src.size());
    Word picked(n);
    std::vector<Scalar> partial(n + 1);
    partial[0] = R.one();
    if (f.kind == FunctorKind::Div) {
        // Distinct rearrangements a' of src paired with nondecreasing target rows b:
        // the coefficient of the orbit sum at b is the sum of prod phi[b_j, a'_j].
        std::vector<int> values;
        std::vector<int> counts;
        for (int v : src) {
            if (values.empty() || values.back() != v) {
                values.push_back(v);
                counts.push_back(0);
            }
            ++counts.back();
        }
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n) {
                emit(picked, partial[n]);
                return;
            }
            for (size_t c = 0; c < values.size(); ++c) {
                if (!counts[c]) continue;
                --counts[c];
                for (const auto& [row, val] : col(values[c])) {
                    if (pos > 0 && row < picked[pos - 1]) continue;
                    picked[pos] = row;
                    partial[pos + 1] = R.mul(partial[pos], val);
                    if (!partial[pos + 1].is_zero()) rec(pos + 1);
                }
                ++counts[c];
            }
        };
        rec(0);
        return;
    }
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            if (f.kind == FunctorKind::Tensor) {
                emit(picked, partial[n]);
            } else if (f.kind == FunctorKind::Sym) {
                Word w = picked;
                std::sort(w.begin(), w.end());
                emit(w, partial[n]);
            } else {
                Word w = picked;
                int s = sort_with_sign(w);
                if (s) emit(w, s > 0 ? partial[n] : R.neg(partial[n]));
            }
            return;
        }
        for (const auto& [row, val] : col(src[pos])) {
            if (f.kind == FunctorKind::Ext) {
                bool used = false;
                for (int q = 0; q < pos; ++q) used |= picked[q] == row;
                if (used) continue;
            }
            picked[pos] = row;
            partial[pos + 1] = R.mul(partial[pos], val);
            if (!partial[pos + 1].is_zero()) rec(pos + 1);
        }
    };
    rec(0);
}

SparseVec apply_word(FunctorTag f, const Ring& R, const Word& src,
                     const std::function<const SparseVec&(int)>& col, const WordIndex& target) {
    std::map<int, Scalar> acc;
    expand_word(f, R, src, col, [&](const Word& w, const Scalar& c) {
        int idx = target.find(w);
        if (idx < 0) throw InvalidArgument("functor expansion left the target basis");
        R.axpy(acc[idx], 1, c);
    });
    SparseVec out;
    for (auto& [i, s] : acc)
        if (!s.is_zero()) out.push_back({i, std::move(s)});
    return out;
}

FunctorModule functor_module(FunctorTag f, const Module& v) {
    FunctorModule out;
    out.words = functor_words(f, v->rank());
    out.index = WordIndex(out.words);
    std::vector<Label> basis;
    std::vector<int> degrees;
    for (const auto& w : out.words) {
        std::vector<Label> parts;
        int d = 0;
        for (int i : w) {
            parts.push_back(v->label(i));
            d += v->degree(i);
        }
        switch (f.kind) {
            case FunctorKind::Sym:
            case FunctorKind::Div: basis.push_back(multiset_label(std::move(parts))); break;
            case FunctorKind::Ext: basis.push_back(wedge_label(std::move(parts))); break;
            case FunctorKind::Tensor: basis.push_back(tuple_label(std::move(parts))); break;
        }
        degrees.push_back(d);
    }
    out.module = make_module(v->ring(), std::move(basis), std::move(degrees));
    return out;
}

Module apply_functor_object(FunctorTag f, const Module& v) { return functor_module(f, v).module; }

ModuleMap apply_functor_map(FunctorTag f, const ModuleMap& phi, const FunctorModule& src,
                            const FunctorModule& dst) {
    const Ring& R = phi.ring();
    const SparseMatrix& m = phi.matrix();
    SparseMatrix out(R, dst.module->rank(), src.module->rank());
    auto col = [&](int v) -> const SparseVec& { return m.column(v); };
    for (size_t j = 0; j < src.words.size(); ++j)
        out.set_column(static_cast<int>(j), apply_word(f, R, src.words[j], col, dst.index));
    return {src.module, dst.module, out};
}

ModuleMap apply_functor_map(FunctorTag f, const ModuleMap& phi) {
    return apply_functor_map(f, phi, functor_module(f, phi.dom()), functor_module(f, phi.cod()));
}

static ModuleMap orbit_sum_map(FunctorKind kind, const Module& v, int n) {
    auto src = functor_module({kind, n}, v);
    auto dst = functor_module(FunctorTag::tensor(n), v);
    const Ring& R = v->ring();
    SparseMatrix m(R, dst.module->rank(), src.module->rank());
    for (size_t j = 0; j < src.words.size(); ++j) {
        Word w = src.words[j];
        SparseVec col;
        do {
            col.push_back({dst.index.find(w), R.one()});
        } while (std::next_permutation(w.begin(), w.end()));
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        m.set_column(static_cast<int>(j), std::move(col));
    }
    return {src.module, dst.module, m};
}

ModuleMap div_to_tensor(const Module& v, int n) { return orbit_sum_map(FunctorKind::Div, v, n); }
ModuleMap sym_to_tensor(const Module& v, int n) { return orbit_sum_map(FunctorKind::Sym, v, n); }

ModuleMap tensor_to_sym(const Module& v, int n) {
    auto src = functor_module(FunctorTag::tensor(n), v);
    auto dst = functor_module(FunctorTag::sym(n), v);
    const Ring& R = v->ring();
    SparseMatrix m(R, dst.module->rank(), src.module->rank());
    for (size_t j = 0; j < src.words.size(); ++j) {
        Word w = src.words[j];
        std::sort(w.begin(), w.end());
        m.set(dst.index.find(w), static_cast<int>(j), R.one());
    }
    return {src.module, dst.module, m};
}

ModuleMap tensor_to_ext(const Module& v, int n) {
    auto src = functor_module(FunctorTag::tensor(n), v);
    auto dst = functor_module(FunctorTag::ext(n), v);
    const Ring& R = v->ring();
    SparseMatrix m(R, dst.module->rank(), src.module->rank());
    for (size_t j = 0; j < src.words.size(); ++j) {
        Word w = src.words[j];
        int s = sort_with_sign(w);
        if (s) m.set(dst.index.find(w), static_cast<int>(j), R.from_int(s));
    }
    return {src.module, dst.module, m};
}

ModuleMap ext_to_tensor(const Module& v, int n) {
    auto src = functor_module(FunctorTag::ext(n), v);
    auto dst = functor_module(FunctorTag::tensor(n), v);
    const Ring& R = v->ring();
    SparseMatrix m(R, dst.module->rank(), src.module->rank());
    std::vector<int> perm(n);
    for (size_t j = 0; j < src.words.size(); ++j) {
        for (int i = 0; i < n; ++i) perm[i] = i;
        const Word& w = src.words[j];
        SparseVec col;
        do {
            Word t(n);
            for (int i = 0; i < n; ++i) t[i] = w[perm[i]];
            col.push_back({dst.index.find(t), R.from_int(permutation_sign(perm))});
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        m.set_column(static_cast<int>(j), std::move(col));
    }
    return {src.module, dst.module, m};
}

ModuleMap tensor_permutation(const Module& v, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    auto fm = functor_module(FunctorTag::tensor(n), v);
    const Ring& R = v->ring();
    SparseMatrix m(R, fm.module->rank(), fm.module->rank());
    for (size_t j = 0; j < fm.words.size(); ++j) {
        Word t(n);
        for (int i = 0; i < n; ++i) t[perm[i]] = fm.words[j][i];
        m.set(fm.index.find(t), static_cast<int>(j), R.one());
    }
    return {fm.module, fm.module, m};
}

ModuleMap power_multiply(FunctorKind kind, const Module& v, int a, int b) {
    if (kind != FunctorKind::Sym && kind != FunctorKind::Ext)
        throw InvalidArgument("power_multiply supports Sym and Ext");
    auto fa = functor_module({kind, a}, v);
    auto fb = functor_module({kind, b}, v);
    auto fc = functor_module({kind, a + b}, v);
    Module dom = tensor_product(fa.module, fb.module);
    const Ring& R = v->ring();
    SparseMatrix m(R, fc.module->rank(), dom->rank());
    for (size_t i = 0; i < fa.words.size(); ++i)
        for (size_t j = 0; j < fb.words.size(); ++j) {
            Word w = fa.words[i];
            w.insert(w.end(), fb.words[j].begin(), fb.words[j].end());
            int col = static_cast<int>(i * fb.words.size() + j);
            if (kind == FunctorKind::Sym) {
                std::sort(w.begin(), w.end());
                m.set(fc.index.find(w), col, R.one());
            } else {
                int s = sort_with_sign(w);
                if (s) m.set(fc.index.find(w), col, R.from_int(s));
            }
        }
    return {dom, fc.module, m};
}

}  // namespace khl
