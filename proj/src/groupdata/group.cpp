#include <nw/groupdata/group.hpp>

#include <sstream>
#include <stdexcept>

namespace nw::groupdata {

AbelianGroup::AbelianGroup(std::vector<unsigned> invariant_factors) : factors_(std::move(invariant_factors)) {
    if (factors_.empty()) throw std::invalid_argument("group: at least one invariant factor required");
    order_ = 1;
    for (unsigned m : factors_) {
        if (m == 0) throw std::invalid_argument("group: invariant factors must be positive");
        order_ *= m;
    }
}

GroupElement AbelianGroup::identity() const { return GroupElement{std::vector<unsigned>(rank(), 0)}; }

GroupElement AbelianGroup::generator(size_t l) const {
    if (l >= rank()) throw std::out_of_range("group: generator index");
    GroupElement g = identity();
    if (factors_[l] > 1) g.e[l] = 1;
    return g;
}

GroupElement AbelianGroup::element(const std::vector<long>& exponents) const {
    if (exponents.size() != rank()) throw std::invalid_argument("group: exponent vector has wrong rank");
    GroupElement g;
    g.e.resize(rank());
    for (size_t l = 0; l < rank(); ++l) {
        long m = static_cast<long>(factors_[l]);
        long v = exponents[l] % m;
        if (v < 0) v += m;
        g.e[l] = static_cast<unsigned>(v);
    }
    return g;
}

GroupElement AbelianGroup::mul(const GroupElement& a, const GroupElement& b) const {
    GroupElement g;
    g.e.resize(rank());
    for (size_t l = 0; l < rank(); ++l) g.e[l] = (a.e[l] + b.e[l]) % factors_[l];
    return g;
}

GroupElement AbelianGroup::inv(const GroupElement& a) const {
    GroupElement g;
    g.e.resize(rank());
    for (size_t l = 0; l < rank(); ++l) g.e[l] = a.e[l] == 0 ? 0 : factors_[l] - a.e[l];
    return g;
}

GroupElement AbelianGroup::pow(const GroupElement& a, long n) const {
    GroupElement g;
    g.e.resize(rank());
    for (size_t l = 0; l < rank(); ++l) {
        long m = static_cast<long>(factors_[l]);
        long v = (static_cast<long>(a.e[l]) * n) % m;
        if (v < 0) v += m;
        g.e[l] = static_cast<unsigned>(v);
    }
    return g;
}

bool AbelianGroup::is_identity(const GroupElement& a) const {
    for (unsigned v : a.e)
        if (v != 0) return false;
    return true;
}

size_t AbelianGroup::index_of(const GroupElement& a) const {
    size_t idx = 0;
    for (size_t l = 0; l < rank(); ++l) idx = idx * factors_[l] + a.e[l];
    return idx;
}

GroupElement AbelianGroup::element_at(size_t index) const {
    GroupElement g;
    g.e.resize(rank());
    for (size_t l = rank(); l-- > 0;) {
        g.e[l] = static_cast<unsigned>(index % factors_[l]);
        index /= factors_[l];
    }
    return g;
}

std::vector<GroupElement> AbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(order_);
    for (size_t i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
}

std::string AbelianGroup::str(const GroupElement& a) const {
    std::ostringstream os;
    bool any = false;
    for (size_t l = 0; l < rank(); ++l) {
        if (a.e[l] == 0) continue;
        if (any) os << "*";
        any = true;
        os << "h" << (l + 1);
        if (a.e[l] > 1) os << "^" << a.e[l];
    }
    return any ? os.str() : "e";
}

}  // namespace nw::groupdata
