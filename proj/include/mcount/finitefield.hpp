#ifndef MCOUNT_FINITEFIELD_HPP
#define MCOUNT_FINITEFIELD_HPP

/*
 * Arithmetic in small finite fields F_{p^k} (p in {2,3,5}), with explicit
 * Frobenius, canonical embeddings between fields of the same
 * characteristic, and element enumeration.
 *
 * Elements are stored in the polynomial basis modulo a fixed deterministic
 * irreducible (the lexicographically smallest monic one), so serialized
 * elements and orbit enumerations are stable across runs.
 *
 * Two layers:
 *   - FieldSpec/FieldElement: clear dense-vector arithmetic, any k <= 12.
 *   - TableField: precomputed add/mul/inv/frobenius tables indexed by the
 *     base-p packed coordinate integer, for the enumeration-heavy paths
 *     (fields of order <= 2048).
 */

#include <cstdint>
#include <string>
#include <vector>

namespace mcount {

class FieldSpec {
public:
    /// Cached spec for F_{p^k}; deterministic modulus. k <= 12, p^k <= 2^24.
    static const FieldSpec& get(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    /// Field order p^k as a plain integer.
    std::int64_t order() const { return order_; }
    /// Monic modulus coefficients c0..c_{k} (c_k = 1).
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }

    bool operator==(const FieldSpec& o) const { return p_ == o.p_ && k_ == o.k_; }

private:
    FieldSpec(int p, int k);

    int p_, k_;
    std::int64_t order_;
    std::vector<std::uint8_t> modulus_;
};

class FieldElement {
public:
    FieldElement() : spec_(nullptr) {}
    FieldElement(const FieldSpec& spec, std::vector<std::uint8_t> coords);

    static FieldElement zero(const FieldSpec& spec);
    static FieldElement one(const FieldSpec& spec);
    /// Element with packed index i = sum coords[j] * p^j.
    static FieldElement from_index(const FieldSpec& spec, std::int64_t i);
    /// Parses the textual format "p^k:[c0,c1,...]".
    static FieldElement parse(const std::string& s);

    const FieldSpec& spec() const { return *spec_; }
    const std::vector<std::uint8_t>& coords() const { return coords_; }
    std::int64_t index() const;  // base-p packed coordinates
    bool is_zero() const;
    std::string to_string() const;  // "p^k:[c0,c1,...]"

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inverse() const;
    FieldElement pow(std::int64_t e) const;

private:
    const FieldSpec* spec_;
    std::vector<std::uint8_t> coords_;  // length k, entries in [0, p)
};

/// a^q where q = p^base_power (Frobenius relative to F_q inside F_{p^k}).
FieldElement frobenius(const FieldElement& a, int base_power = 1);

/// Canonical embedding F_{p^j} -> F_{p^k} for j | k: the fixed F_p-algebra
/// homomorphism sending the source generator to the lexicographically
/// smallest root of the source modulus in the target field.
FieldElement embed(const FieldElement& a, const FieldSpec& target);

/// Smallest d >= 1 with frobenius^d(a) = a, Frobenius relative to
/// F_{p^base_power}.
int element_degree(const FieldElement& a, int base_power = 1);

/// All elements of the field in index order (size p^k).
std::vector<FieldElement> enumerate_field(const FieldSpec& spec);

/*
 * Index-based tables for fast inner loops. Element "indices" coincide with
 * FieldElement::index(), so the two layers interconvert trivially.
 */
class TableField {
public:
    /// Cached tables for F_{p^k}; requires p^k <= 2048.
    static const TableField& get(int p, int k);

    const FieldSpec& spec() const { return *spec_; }
    int n() const { return n_; }

    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[a * n_ + b]; }
    std::uint16_t sub(std::uint16_t a, std::uint16_t b) const { return add_[a * n_ + neg_[b]]; }
    std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_[a * n_ + b]; }
    std::uint16_t inv(std::uint16_t a) const { return inv_[a]; }
    std::uint16_t div(std::uint16_t a, std::uint16_t b) const { return mul(a, inv_[b]); }
    /// x -> x^p; iterate for higher powers.
    std::uint16_t frob_p(std::uint16_t a) const { return frob_[a]; }
    /// x -> x^{p^e}.
    std::uint16_t frob(std::uint16_t a, int e) const {
        for (int i = 0; i < e; ++i) a = frob_[a];
        return a;
    }
    std::uint16_t one() const { return one_; }

private:
    explicit TableField(const FieldSpec& spec);

    const FieldSpec* spec_;
    int n_;
    std::uint16_t one_;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_, frob_;
};

/// Index-remap table for the canonical embedding F_{p^j} -> F_{p^k}.
const std::vector<std::uint16_t>& embedding_table(const FieldSpec& src,
                                                  const FieldSpec& dst);

}  // namespace mcount

#endif  // MCOUNT_FINITEFIELD_HPP
