#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace hahn::dvr {

// The discrete-valuation specialization: an independent, integer-indexed
// oracle for the dense-value-group engine. Its basic modules are the
// fraction field, the ring, the quotient Theta = K/I_1 and the cyclic
// torsion modules A/I_n.
enum class DvrKind { K, A, Theta, Torsion };

class DvrBasic {
public:
    static DvrBasic field() { return DvrBasic(DvrKind::K, 0); }
    static DvrBasic ring() { return DvrBasic(DvrKind::A, 0); }
    static DvrBasic theta() { return DvrBasic(DvrKind::Theta, 0); }
    static DvrBasic torsion(long long n) {
        if (n < 1)
            throw std::invalid_argument("DvrBasic: torsion length must be >= 1");
        return DvrBasic(DvrKind::Torsion, n);
    }

    DvrKind kind() const { return kind_; }
    long long length() const {
        if (kind_ != DvrKind::Torsion)
            throw std::domain_error("DvrBasic: not a torsion module");
        return n_;
    }

    friend bool operator==(const DvrBasic&, const DvrBasic&) = default;
    friend std::strong_ordering operator<=>(const DvrBasic&, const DvrBasic&) = default;

    std::string to_string() const;

private:
    DvrBasic(DvrKind k, long long n) : kind_(k), n_(n) {}
    DvrKind kind_;
    long long n_;
};

class DvrMultibasic {
public:
    DvrMultibasic() = default;
    explicit DvrMultibasic(std::vector<DvrBasic> summands);
    DvrMultibasic(std::initializer_list<DvrBasic> summands)
        : DvrMultibasic(std::vector<DvrBasic>(summands)) {}
    explicit DvrMultibasic(DvrBasic b) : summands_{b} {}

    static DvrMultibasic zero() { return {}; }

    const std::vector<DvrBasic>& summands() const { return summands_; }
    bool is_zero() const { return summands_.empty(); }

    DvrMultibasic& add_summand(const DvrBasic& b);
    friend bool operator==(const DvrMultibasic&, const DvrMultibasic&) = default;

    std::string to_string() const;

private:
    std::vector<DvrBasic> summands_; // sorted
};

// Bi-additive extensions of the printed 4x4 tables.
DvrMultibasic dvr_hom(const DvrMultibasic& m, const DvrMultibasic& n);
DvrMultibasic dvr_tensor(const DvrMultibasic& m, const DvrMultibasic& n);

// K and A/I_n are self-dual; the ring and Theta swap. An involution.
DvrMultibasic dvr_dual(const DvrMultibasic& m);

// The annihilator ideal of a finite sum: the whole ring for the zero module,
// zero if any summand is faithful, otherwise the largest torsion index.
struct DvrAnnihilator {
    enum class Kind { whole_ring, zero_ideal, power } kind;
    long long index; // for Kind::power

    friend bool operator==(const DvrAnnihilator&, const DvrAnnihilator&) = default;
    std::string to_string() const;
};

struct DvrInvariants {
    long long dim_k_tensor = 0;      // dim over K of K (x) M
    long long dim_k_tensor_dual = 0; // dim over K of K (x) DM
    long long dim_f_tensor = 0;      // dim over the residue field of F (x) M
    long long dim_f_tensor_dual = 0; // dim over the residue field of F (x) DM
    DvrAnnihilator annihilator{DvrAnnihilator::Kind::whole_ring, 0};

    friend bool operator==(const DvrInvariants&, const DvrInvariants&) = default;
};

DvrInvariants dvr_invariants(const DvrMultibasic& m);

} // namespace hahn::dvr
