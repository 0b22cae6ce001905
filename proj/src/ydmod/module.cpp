#include <nw/exact/linalg.hpp>
#include <nw/ydmod/module.hpp>

#include <stdexcept>

namespace nw::ydmod {

namespace {

void check_square_dim(const std::vector<Matrix>& ms, size_t dim, const std::string& what) {
    for (const auto& m : ms)
        if (m.rows() != dim || m.cols() != dim)
            throw std::invalid_argument(what + ": action matrices must all be square of the module dimension");
}

}  // namespace

YDModule YDModule::from_generator_actions(const ThreeCocycle& phi, std::string name, GroupElement degree,
                                          std::vector<Matrix> generator_actions) {
    const AbelianGroup& g = phi.group();
    if (generator_actions.size() != g.rank())
        throw std::invalid_argument("module " + name + ": need one action matrix per group generator");
    if (generator_actions.empty()) throw std::invalid_argument("module " + name + ": rank-zero group");
    const size_t dim = generator_actions[0].rows();
    if (dim == 0) throw std::invalid_argument("module " + name + ": dimension must be positive");
    check_square_dim(generator_actions, dim, "module " + name);

    const TwoCocycle tphi(phi, degree);
    std::vector<Matrix> table(g.order());
    for (size_t idx = 0; idx < g.order(); ++idx) {
        const GroupElement y = g.element_at(idx);
        Matrix a = Matrix::identity(dim);
        GroupElement p = g.identity();
        for (size_t l = 0; l < g.rank(); ++l) {
            const GroupElement hl = g.generator(l);
            for (unsigned t = 0; t < y.e[l]; ++t) {
                a = (a * generator_actions[l]).scaled(tphi.eval(p, hl).inverse());
                p = g.mul(p, hl);
            }
        }
        table[idx] = std::move(a);
    }
    return from_full_table(phi, std::move(name), std::move(degree), std::move(table));
}

YDModule YDModule::from_full_table(const ThreeCocycle& phi, std::string name, GroupElement degree,
                                   std::vector<Matrix> all_actions) {
    const AbelianGroup& g = phi.group();
    if (all_actions.size() != g.order())
        throw std::invalid_argument("module " + name + ": need one action matrix per group element");
    const size_t dim = all_actions[0].rows();
    check_square_dim(all_actions, dim, "module " + name);
    YDModule m;
    m.name_ = std::move(name);
    m.degree_ = std::move(degree);
    m.dim_ = dim;
    m.phi_ = &phi;
    m.actions_ = std::make_shared<const std::vector<Matrix>>(std::move(all_actions));
    return m;
}

const Matrix& YDModule::action(const GroupElement& h) const { return (*actions_)[group().index_of(h)]; }

std::vector<std::string> YDModule::validate() const {
    std::vector<std::string> bad;
    const AbelianGroup& g = group();
    if (action(g.identity()) != Matrix::identity(dim_)) bad.push_back(name_ + ": identity does not act trivially");
    for (const auto& h : g.elements())
        if (!nw::exact::inverse(action(h))) {
            bad.push_back(name_ + ": action of " + g.str(h) + " is singular");
            if (bad.size() > 20) return bad;
        }
    const TwoCocycle tphi = proj_cocycle();
    for (const auto& h : g.elements())
        for (const auto& l : g.elements()) {
            if (action(h) * action(l) != action(g.mul(h, l)).scaled(tphi.eval(h, l))) {
                bad.push_back(name_ + ": projective relation fails at (" + g.str(h) + ", " + g.str(l) + ")");
                if (bad.size() > 20) return bad;
            }
        }
    return bad;
}

bool YDModule::is_simple() const {
    std::vector<Matrix> gens;
    for (size_t l = 0; l < group().rank(); ++l) gens.push_back(action(group().generator(l)));
    return nw::exact::solve_intertwiner(gens, gens, dim_, dim_).space_dim == 1;
}

Fingerprint YDModule::fingerprint() const {
    Fingerprint f;
    f.degree = degree_;
    f.dim = dim_;
    f.character.reserve(group().order());
    for (size_t idx = 0; idx < group().order(); ++idx) {
        CycNumber tr = CycNumber::zero();
        for (size_t i = 0; i < dim_; ++i) tr += action_at(idx).at(i, i);
        f.character.push_back(std::move(tr));
    }
    return f;
}

YDModule YDModule::dual(std::string name) const {
    const AbelianGroup& g = group();
    const GroupElement gdeg_inv = g.inv(degree_);
    const TwoCocycle tphi = proj_cocycle();
    std::vector<Matrix> table(g.order());
    for (size_t idx = 0; idx < g.order(); ++idx) {
        const GroupElement h = g.element_at(idx);
        const GroupElement hinv = g.inv(h);
        const TwoCocycle tphi_h(*phi_, h);
        const CycNumber s = (tphi.eval(h, hinv) * tphi_h.eval(gdeg_inv, degree_)).inverse();
        table[idx] = action(hinv).transpose().scaled(s);
    }
    return from_full_table(*phi_, std::move(name), gdeg_inv, std::move(table));
}

YDModule YDModule::conjugated(std::string name, const Matrix& p) const {
    const auto pinv = nw::exact::inverse(p);
    if (!pinv) throw std::invalid_argument("conjugated: change-of-basis matrix is singular");
    std::vector<Matrix> table(group().order());
    for (size_t idx = 0; idx < group().order(); ++idx) table[idx] = (*pinv * action_at(idx)) * p;
    return from_full_table(*phi_, std::move(name), degree_, std::move(table));
}

std::vector<std::string> ModuleTuple::validate() const {
    std::vector<std::string> bad;
    if (entries.empty()) bad.push_back("tuple is empty");
    for (const auto& m : entries) {
        const auto sub = m.validate();
        bad.insert(bad.end(), sub.begin(), sub.end());
        if (sub.empty() && !m.is_simple()) bad.push_back(m.name() + ": not simple (nontrivial commutant)");
    }
    return bad;
}

Matrix braiding(const YDModule& v, const YDModule& w) {
    if (&v.cocycle() != &w.cocycle()) throw std::invalid_argument("braiding: modules over different cocycles");
    const Matrix& b = w.action(v.degree());
    const size_t dv = v.dim(), dw = w.dim();
    Matrix c(dw * dv, dv * dw);
    for (size_t i = 0; i < dv; ++i)
        for (size_t j = 0; j < dw; ++j)
            for (size_t k = 0; k < dw; ++k) c.at(k * dv + i, i * dw + j) = b.at(k, j);
    return c;
}

Matrix inverse_braiding(const YDModule& v, const YDModule& w) {
    const auto inv = nw::exact::inverse(braiding(v, w));
    if (!inv) throw std::logic_error("braiding is singular; module actions must be invertible");
    return *inv;
}

Matrix tensor_action(const GroupElement& x, const std::vector<const YDModule*>& mods) {
    if (mods.empty()) throw std::invalid_argument("tensor_action: empty module list");
    for (const auto* m : mods)
        if (&m->cocycle() != &mods[0]->cocycle())
            throw std::invalid_argument("tensor_action: modules over different cocycles");
    const AbelianGroup& g = mods[0]->group();
    const TwoCocycle tphi_x(mods[0]->cocycle(), x);
    Matrix a = mods[0]->action(x);
    GroupElement d = mods[0]->degree();
    for (size_t t = 1; t < mods.size(); ++t) {
        a = Matrix::kron(a, mods[t]->action(x)).scaled(tphi_x.eval(d, mods[t]->degree()));
        d = g.mul(d, mods[t]->degree());
    }
    return a;
}

YDModule tensor_module(std::string name, const std::vector<const YDModule*>& mods) {
    if (mods.empty()) throw std::invalid_argument("tensor_module: empty module list");
    const AbelianGroup& g = mods[0]->group();
    GroupElement d = g.identity();
    for (const auto* m : mods) d = g.mul(d, m->degree());
    std::vector<Matrix> table(g.order());
    for (size_t idx = 0; idx < g.order(); ++idx) table[idx] = tensor_action(g.element_at(idx), mods);
    return YDModule::from_full_table(mods[0]->cocycle(), std::move(name), std::move(d), std::move(table));
}

}  // namespace nw::ydmod
