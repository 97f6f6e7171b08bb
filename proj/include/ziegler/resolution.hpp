#pragma once

// Graded free resolutions built from Schreyer frames, their minimization, and
// the Betti-table analytics derived from them.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ziegler/groebner.hpp"

namespace ziegler {

/// Dense matrix of polynomials, stored by columns.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols, std::vector<Poly>(rows, Poly(f))) {}

    Field field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_.size(); }

    Poly& at(std::size_t r, std::size_t c) { return cols_[c][r]; }
    const Poly& at(std::size_t r, std::size_t c) const { return cols_[c][r]; }

    void erase_row(std::size_t r);
    void erase_col(std::size_t c);

    bool is_zero() const;
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::vector<std::vector<Poly>> cols_;
};

/// Graded Betti numbers beta_{i,j}: multiplicity of S(-j) in homological degree i.
class BettiTable {
public:
    using Key = std::pair<int, int>;

    BettiTable() = default;
    BettiTable(std::initializer_list<std::pair<const Key, long>> entries);

    void add(int i, int j, long n = 1);
    long at(int i, int j) const;
    const std::map<Key, long>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    /// Largest homological index with a nonzero entry.
    int length() const;
    /// Sum over j of beta_{i,j}.
    long total(int i) const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

    /// "S(-9) ⊕ S(-10)^2" for homological index i.
    std::string module_string(int i) const;
    /// "0 → S(-12) → S(-10)^3 → S(-6)^3 → S(0)".
    std::string chain_string() const;
    /// Macaulay2-style diagram: columns i, rows j - i.
    std::string diagram() const;

private:
    std::map<Key, long> entries_;
};

struct FreeResolution {
    Field field;
    /// twists[i]: degrees of the basis of F_i.
    std::vector<std::vector<int>> twists;
    /// differentials[i - 1] = d_i : F_i -> F_{i-1}, rows indexed by F_{i-1}.
    std::vector<PolyMatrix> differentials;
    bool minimal = false;

    std::size_t length() const noexcept { return differentials.size(); }
    const PolyMatrix& d(std::size_t i) const { return differentials.at(i - 1); }
};

/// Resolution of F/U for the submodule U with Groebner basis J (S/J for ideals).
/// F_1 is the basis itself and each later step is a Schreyer frame, so the result
/// is usually not minimal.
FreeResolution free_resolution(const GroebnerBasis& J);

/// Splits off trivial complexes by pivoting on scalar entries until none remain.
FreeResolution minimize(FreeResolution R);

/// Throws NotMinimal unless R went through minimize().
BettiTable betti_table(const FreeResolution& R);

/// d_{i-1} * d_i == 0 for every i.
bool is_complex(const FreeResolution& R);
/// Every entry of d_i at (r, c) is zero or homogeneous of degree twist_i[c] - twist_{i-1}[r].
bool is_graded(const FreeResolution& R);
/// No nonzero scalar entry in any differential.
bool has_unit_entries(const FreeResolution& R);

/// Alternating twist count sum_i (-1)^i sum_{a in twists_i} dim S_{t-a}.
long resolution_hilbert_function(const FreeResolution& R, int t);
long betti_hilbert_function(const BettiTable& B, int t);

/// N(t) = sum (-1)^i beta_{i,j} t^j with its low-order data at t = 1.
struct BettiNumerator {
    std::map<int, long> coefficients;
    long value_at_one = 0;
    long derivative_at_one = 0;
    long half_second_derivative_at_one = 0;
};
BettiNumerator betti_numerator(const BettiTable& B);

/// max (j - i) over the entries.
int regularity(const BettiTable& B);

}  // namespace ziegler
