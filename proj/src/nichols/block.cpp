#include <nw/groupdata/coherence.hpp>
#include <nw/nichols/element.hpp>
#include <nw/nichols/space.hpp>

#include <sstream>

namespace nw::nichols {

using nw::groupdata::BracketTree;
using nw::groupdata::TwoCocycle;

BraidedSpace::BraidedSpace(const YDModule& m, size_t max_side)
    : parts_({&m}), phi_(&m.cocycle()), max_side_(max_side) {
    init();
}

BraidedSpace::BraidedSpace(std::vector<const YDModule*> parts, size_t max_side)
    : parts_(std::move(parts)), phi_(nullptr), max_side_(max_side) {
    if (parts_.empty()) throw std::invalid_argument("braided space: no summands");
    phi_ = &parts_[0]->cocycle();
    for (const auto* p : parts_)
        if (&p->cocycle() != phi_) throw std::invalid_argument("braided space: summands over different cocycles");
    init();
}

void BraidedSpace::init() {
    dim_ = 0;
    for (size_t s = 0; s < parts_.size(); ++s) {
        offsets_.push_back(dim_);
        dim_ += parts_[s]->dim();
        for (size_t k = 0; k < parts_[s]->dim(); ++k) {
            part_index_.push_back(s);
            degrees_.push_back(parts_[s]->degree());
        }
    }
    const AbelianGroup& g = group();
    actions_.reserve(g.order());
    for (size_t idx = 0; idx < g.order(); ++idx) {
        Matrix a(dim_, dim_);
        for (size_t s = 0; s < parts_.size(); ++s) {
            const Matrix& block = parts_[s]->action_at(idx);
            for (size_t r = 0; r < block.rows(); ++r)
                for (size_t c = 0; c < block.cols(); ++c) a.at(offsets_[s] + r, offsets_[s] + c) = block.at(r, c);
        }
        actions_.push_back(std::move(a));
    }
}

size_t BraidedSpace::part_of(size_t basis_index) const { return part_index_[basis_index]; }

const Matrix& BraidedSpace::action(const GroupElement& x) const { return actions_[group().index_of(x)]; }

size_t BraidedSpace::power_dim(size_t n) const {
    size_t d = 1;
    for (size_t k = 0; k < n; ++k) {
        if (d > max_side_ / dim_ && dim_ > 1)
            throw CapExceeded("tensor power dimension " + std::to_string(d) + "*" + std::to_string(dim_) +
                              " exceeds the configured matrix cap " + std::to_string(max_side_));
        d *= dim_;
        if (d > max_side_)
            throw CapExceeded("tensor power dimension " + std::to_string(d) +
                              " exceeds the configured matrix cap " + std::to_string(max_side_));
    }
    return d;
}

std::vector<size_t> BraidedSpace::decode(size_t flat, size_t n) const {
    std::vector<size_t> digits(n);
    for (size_t t = n; t-- > 0;) {
        digits[t] = flat % dim_;
        flat /= dim_;
    }
    return digits;
}

size_t BraidedSpace::encode(const std::vector<size_t>& digits) const {
    size_t flat = 0;
    for (const size_t d : digits) flat = flat * dim_ + d;
    return flat;
}

const Matrix& BraidedSpace::sigma(size_t n, size_t t) const {
    if (t < 1 || t >= n) throw std::out_of_range("sigma index must satisfy 1 <= t <= n-1");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = sigmas_.find({n, t});
    if (it == sigmas_.end()) it = sigmas_.emplace(std::make_pair(n, t), build_sigma(n, t)).first;
    return it->second;
}

Matrix BraidedSpace::build_sigma(size_t n, size_t t) const {
    const size_t total = power_dim(n);
    const AbelianGroup& g = group();
    Matrix out(total, total);

    // Left comb of slot degrees -> comb with slots (t, t+1) isolated as one
    // inner pair; the two rebracketing scalars depend only on the degree
    // sequence, so group them by the per-slot degree digits.
    for (size_t src = 0; src < total; ++src) {
        const std::vector<size_t> u = decode(src, n);
        GroupElement pre = g.identity();
        for (size_t k = 0; k + 1 < t; ++k) pre = g.mul(pre, degree_of(u[k]));
        const GroupElement dt = degree_of(u[t - 1]), dt1 = degree_of(u[t]);
        // Isolate, braid, and re-absorb: Phi(pre, d_{t+1}, d_t) / Phi(pre, d_t, d_{t+1}).
        const CycNumber scalar = phi_->eval(pre, dt1, dt) * phi_->eval(pre, dt, dt1).inverse();
        // c(v tensor w) = (deg v acting on w) tensor v on the isolated pair.
        const Matrix& act = action(dt);
        for (size_t k = 0; k < dim_; ++k) {
            if (act.at(k, u[t]).is_zero()) continue;
            std::vector<size_t> v = u;
            v[t - 1] = k;
            v[t] = u[t - 1];
            out.at(encode(v), src) += scalar * act.at(k, u[t]);
        }
    }
    return out;
}

const Matrix& BraidedSpace::power_action(const GroupElement& x, size_t n) const {
    const std::pair<size_t, size_t> key{group().index_of(x), n};
    {
        std::lock_guard<std::mutex> lock(mu_);
        const auto it = power_actions_.find(key);
        if (it != power_actions_.end()) return it->second;
    }
    Matrix built = build_power_action(x, n);
    std::lock_guard<std::mutex> lock(mu_);
    return power_actions_.emplace(key, std::move(built)).first->second;
}

Matrix BraidedSpace::build_power_action(const GroupElement& x, size_t n) const {
    if (n == 0) return Matrix::identity(1);
    power_dim(n);
    const AbelianGroup& g = group();
    const TwoCocycle tphi_x(*phi_, x);
    Matrix a = action(x);
    for (size_t cur = 1; cur < n; ++cur) {
        Matrix next = Matrix::kron(a, action(x));
        // Column scalar: the actor's derived 2-cocycle evaluated on
        // (degree of the absorbed prefix, degree of the new slot).
        for (size_t col = 0; col < next.cols(); ++col) {
            const size_t u_new = col % dim_;
            GroupElement pre = g.identity();
            for (const size_t digit : decode(col / dim_, cur)) pre = g.mul(pre, degree_of(digit));
            const CycNumber s = tphi_x.eval(pre, degree_of(u_new));
            if (s.is_one()) continue;
            for (size_t row = 0; row < next.rows(); ++row)
                if (!next.at(row, col).is_zero()) next.at(row, col) *= s;
        }
        a = std::move(next);
    }
    return a;
}

// ---- TensorElement ---------------------------------------------------------

TensorElement& TensorElement::add(size_t flat, const CycNumber& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = coeffs.emplace(flat, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
    return *this;
}

TensorElement TensorElement::scaled(const CycNumber& s) const {
    TensorElement out{space, level, {}};
    if (s.is_zero()) return out;
    for (const auto& [k, c] : coeffs) out.coeffs.emplace(k, c * s);
    return out;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement out = *this;
    for (const auto& [k, c] : o.coeffs) out.add(k, c);
    return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement out = *this;
    for (const auto& [k, c] : o.coeffs) out.add(k, -c);
    return out;
}

GroupElement TensorElement::degree() const {
    const AbelianGroup& g = space->group();
    if (coeffs.empty()) return g.identity();
    GroupElement d = g.identity();
    bool first = true;
    for (const auto& [flat, c] : coeffs) {
        GroupElement term = g.identity();
        for (const size_t digit : space->decode(flat, level)) term = g.mul(term, space->degree_of(digit));
        if (first) {
            d = term;
            first = false;
        } else if (term != d) {
            throw std::logic_error("tensor element is not degree-homogeneous");
        }
    }
    return d;
}

std::string TensorElement::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [flat, c] : coeffs) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*e[";
        const auto digits = space->decode(flat, level);
        for (size_t t = 0; t < digits.size(); ++t) os << (t ? "," : "") << digits[t];
        os << "]";
    }
    return os.str();
}

TensorElement basis_element(std::shared_ptr<const BraidedSpace> space, size_t part, size_t k) {
    TensorElement e{std::move(space), 1, {}};
    e.coeffs.emplace(e.space->part_offset(part) + k, CycNumber::one());
    return e;
}

TensorElement apply_matrix(const Matrix& m, const TensorElement& v) {
    TensorElement out{v.space, v.level, {}};
    for (size_t row = 0; row < m.rows(); ++row) {
        CycNumber acc = CycNumber::zero();
        for (const auto& [k, c] : v.coeffs)
            if (!m.at(row, k).is_zero()) acc += m.at(row, k) * c;
        if (!acc.is_zero()) out.coeffs.emplace(row, std::move(acc));
    }
    return out;
}

TensorElement multiply(const TensorElement& u, const TensorElement& w) {
    if (u.space != w.space) throw std::invalid_argument("multiply: elements of different spaces");
    const BraidedSpace& sp = *u.space;
    const AbelianGroup& g = sp.group();
    TensorElement out{u.space, u.level + w.level, {}};
    sp.power_dim(out.level);
    for (const auto& [fu, cu] : u.coeffs) {
        const auto du = sp.decode(fu, u.level);
        std::vector<GroupElement> degs_u;
        for (const size_t d : du) degs_u.push_back(sp.degree_of(d));
        for (const auto& [fw, cw] : w.coeffs) {
            const auto dw = sp.decode(fw, w.level);
            std::vector<GroupElement> degs_all = degs_u;
            for (const size_t d : dw) degs_all.push_back(sp.degree_of(d));
            std::vector<GroupElement> degs_w(degs_all.begin() + static_cast<long>(u.level), degs_all.end());
            // Scalar moving (left comb of u) tensor (left comb of w) to the
            // single left comb of the concatenation.
            const BracketTree from = BracketTree::node(BracketTree::left_comb(g, degs_u),
                                                       BracketTree::left_comb(g, degs_w));
            const BracketTree to = BracketTree::left_comb(g, degs_all);
            const CycNumber kappa = coherence_scalar(sp.cocycle(), from, to);
            std::vector<size_t> digits = du;
            digits.insert(digits.end(), dw.begin(), dw.end());
            out.add(sp.encode(digits), cu * cw * kappa);
        }
    }
    return out;
}

TensorElement ad_apply(const TensorElement& a, const TensorElement& x) {
    if (a.level != 1) throw std::invalid_argument("ad_apply: the acting element must have level 1");
    const GroupElement ga = a.degree();
    const Matrix moved = x.space->power_action(ga, x.level);
    return multiply(a, x) - multiply(apply_matrix(moved, x), a);
}

bool is_zero_in_nichols(const TensorElement& v) {
    if (v.is_zero()) return true;
    const Matrix& sym = v.space->symmetrizer(v.level);
    return apply_matrix(sym, v).is_zero();
}

}  // namespace nw::nichols
