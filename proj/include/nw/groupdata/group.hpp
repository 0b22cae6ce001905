#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nw::groupdata {

// Element of Z_{m_1} x ... x Z_{m_k} in canonical form: exponent vector with
// 0 <= e[l] < m_l. All arithmetic goes through the owning AbelianGroup.
struct GroupElement {
    std::vector<unsigned> e;

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.e == b.e; }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return a.e != b.e; }
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.e < b.e; }
};

class AbelianGroup {
  public:
    explicit AbelianGroup(std::vector<unsigned> invariant_factors);

    size_t rank() const { return factors_.size(); }
    unsigned factor(size_t l) const { return factors_[l]; }
    const std::vector<unsigned>& factors() const { return factors_; }
    size_t order() const { return order_; }

    GroupElement identity() const;
    GroupElement generator(size_t l) const;  // h_{l+1}
    GroupElement element(const std::vector<long>& exponents) const;

    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    GroupElement pow(const GroupElement& a, long n) const;
    bool is_identity(const GroupElement& a) const;

    // Mixed-radix enumeration; index_of(element_at(i)) == i.
    size_t index_of(const GroupElement& a) const;
    GroupElement element_at(size_t index) const;
    std::vector<GroupElement> elements() const;

    std::string str(const GroupElement& a) const;  // "e", "h1", "h2^2*h3", ...

  private:
    std::vector<unsigned> factors_;
    size_t order_;
};

}  // namespace nw::groupdata
