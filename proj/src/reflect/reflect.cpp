#include <nw/exact/linalg.hpp>
#include <nw/reflect/reflect.hpp>
#include <nw/ydmod/iso.hpp>

#include <sstream>

namespace nw::reflect {

using nw::exact::CycNumber;
using nw::exact::Matrix;
using nw::groupdata::GroupElement;
using nw::nichols::ad_chain;
using nw::nichols::apply_matrix;
using nw::nichols::CapExceeded;
using nw::nichols::TensorElement;

std::vector<std::string> CartanMatrix::validate() const {
    std::vector<std::string> out;
    const size_t n = size();
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) {
            out.push_back("row " + std::to_string(i + 1) + " has wrong length");
            return out;
        }
    }
    for (size_t i = 0; i < n; ++i) {
        if (a[i][i] != 2) out.push_back("diagonal entry " + std::to_string(i + 1) + " is not 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0)
                out.push_back("positive off-diagonal entry at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                out.push_back("zero-symmetry broken at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ")");
        }
    }
    return out;
}

std::string CartanMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < size(); ++i) {
        os << (i ? "," : "") << "[";
        for (size_t j = 0; j < size(); ++j) os << (j ? "," : "") << a[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

// Rows `rows` of m, in order.
Matrix take_rows(const Matrix& m, const std::vector<size_t>& rows) {
    Matrix out(rows.size(), m.cols());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(rows[r], c);
    return out;
}

// Columns = symmetrizer images of the given level-n elements.
Matrix image_columns(const Matrix& sym, const std::vector<TensorElement>& els) {
    Matrix out(sym.rows(), els.size());
    for (size_t c = 0; c < els.size(); ++c) {
        const TensorElement s = apply_matrix(sym, els[c]);
        for (const auto& [idx, coeff] : s.coeffs) out.at(idx, c) = coeff;
    }
    return out;
}

}  // namespace

YDModule ad_iterate_module(const AdChain& chain, const YDModule& mi, const YDModule& mj, std::string name) {
    if (!chain.nilpotency) throw CapExceeded("reflection undefined at cap: adjoint chain did not terminate");
    const size_t m = *chain.nilpotency;
    const auto& g = mi.group();
    const GroupElement degree = g.mul(g.pow(mi.degree(), static_cast<long>(m)), mj.degree());

    if (m == 0) {
        // ad^0(M_j) = M_j itself; rebuild it under the new name.
        std::vector<Matrix> actions;
        actions.reserve(g.order());
        for (size_t idx = 0; idx < g.order(); ++idx) actions.push_back(mj.action_at(idx));
        return YDModule::from_full_table(mj.cocycle(), std::move(name), degree, std::move(actions));
    }

    const auto& sp = *chain.space;
    const size_t n = m + 1;
    const std::vector<TensorElement>& basis = chain.levels[m];
    const size_t k = basis.size();
    const Matrix& sym = sp.symmetrizer(n);

    const Matrix w = image_columns(sym, basis);
    // A set of rows on which the (full-column-rank) image matrix is invertible.
    const auto rows = nw::exact::rank_kernel(w.transpose()).pivot_cols;
    if (rows.size() != k) throw std::logic_error("adjoint iterate basis is not independent");
    const auto wr_inv = nw::exact::inverse(take_rows(w, rows));
    if (!wr_inv) throw std::logic_error("adjoint iterate row submatrix is singular");

    std::vector<Matrix> actions;
    actions.reserve(g.order());
    for (size_t idx = 0; idx < g.order(); ++idx) {
        const Matrix& px = sp.power_action(g.element_at(idx), n);
        std::vector<TensorElement> moved;
        moved.reserve(k);
        for (const TensorElement& b : basis) moved.push_back(apply_matrix(px, b));
        const Matrix y = image_columns(sym, moved);
        Matrix c = *wr_inv * take_rows(y, rows);
        if (w * c != y) throw std::logic_error("adjoint iterate span is not stable under the action");
        actions.push_back(std::move(c));
    }
    return YDModule::from_full_table(mi.cocycle(), std::move(name), degree, std::move(actions));
}

ModuleTuple reflect(const ModuleTuple& t, size_t i, size_t cap, size_t max_side) {
    if (i >= t.size()) throw std::invalid_argument("reflect: slot index out of range");
    ModuleTuple out;
    out.entries.reserve(t.size());
    for (size_t j = 0; j < t.size(); ++j) {
        YDModule built = [&] {
            if (j == i) return t[i].dual(t[i].name() + "*");
            const AdChain chain = ad_chain(t[i], t[j], cap, max_side);
            if (!chain.nilpotency)
                throw CapExceeded("reflection undefined at cap: pair (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + ")");
            const std::string name =
                "ad(" + t[i].name() + ")^" + std::to_string(*chain.nilpotency) + "(" + t[j].name() + ")";
            return ad_iterate_module(chain, t[i], t[j], name);
        }();
        const auto problems = built.validate();
        if (!problems.empty())
            throw std::logic_error("reflected slot " + std::to_string(j + 1) + " invalid: " + problems.front());
        if (!built.is_simple()) throw std::logic_error("reflected slot " + std::to_string(j + 1) + " is not simple");
        out.entries.push_back(std::move(built));
    }
    return out;
}

CartanMatrix cartan_of(const ModuleTuple& t, size_t cap, size_t max_side) {
    const size_t n = t.size();
    CartanMatrix cm;
    cm.a.assign(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        cm.a[i][i] = 2;
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto m = nw::nichols::cartan_entry(t[i], t[j], cap, max_side);
            if (!m)
                throw CapExceeded("cap exceeded at pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ")");
            cm.a[i][j] = -static_cast<long>(*m);
        }
    }
    const auto problems = cm.validate();
    if (!problems.empty()) throw std::logic_error("computed Cartan matrix is not a GCM: " + problems.front());
    return cm;
}

size_t TupleCatalog::classify(const ModuleTuple& t) {
    std::lock_guard<std::mutex> lock(mu_);
    if (const auto id = find_locked(t)) return *id;
    std::vector<Fingerprint> key;
    key.reserve(t.size());
    for (const auto& e : t.entries) key.push_back(e.fingerprint());
    reps_.push_back(t);
    keys_.push_back(std::move(key));
    return reps_.size() - 1;
}

std::optional<size_t> TupleCatalog::find(const ModuleTuple& t) const {
    std::lock_guard<std::mutex> lock(mu_);
    return find_locked(t);
}

std::optional<size_t> TupleCatalog::find_locked(const ModuleTuple& t) const {
    std::vector<Fingerprint> key;
    key.reserve(t.size());
    for (const auto& e : t.entries) key.push_back(e.fingerprint());
    for (size_t c = 0; c < reps_.size(); ++c) {
        if (keys_[c] != key) continue;
        bool all = true;
        for (size_t j = 0; j < t.size() && all; ++j) all = nw::ydmod::iso_test(reps_[c][j], t[j]).has_value();
        if (all) return c;
    }
    return std::nullopt;
}

size_t TupleCatalog::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return reps_.size();
}

ModuleTuple TupleCatalog::representative(size_t id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return reps_.at(id);
}

}  // namespace nw::reflect
