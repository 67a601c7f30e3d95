#pragma once

// Value types shared by every module: module-basis indices, basis symbols of
// the catalog Lie algebras, and their finite linear combinations.

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include "fockrep/numerics.hpp"

namespace fockrep {

enum class AlgebraKind { gl, loop, witt, qtorus, weyl };

inline std::string to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::gl: return "gl";
    case AlgebraKind::loop: return "loop";
    case AlgebraKind::witt: return "witt";
    case AlgebraKind::qtorus: return "qtorus";
    case AlgebraKind::weyl: return "weyl";
  }
  return "?";
}

/// Basis vector w_(row, exp) of the module W. The Witt module uses row 0;
/// gl_N uses exponent 0. Ordered by (exp, row).
struct Index {
  int row = 0;
  std::int64_t exp = 0;

  friend bool operator==(const Index&, const Index&) = default;
  friend std::strong_ordering operator<=>(const Index& a, const Index& b) {
    if (auto c = a.exp <=> b.exp; c != 0) return c;
    return a.row <=> b.row;
  }
};

/// One basis element of a catalog algebra.
///   gl:     E_ij
///   loop:   E_ij (x) t^a
///   witt:   L_a              (i = j = 0)
///   qtorus: E_ij x^a y^b
///   weyl:   E_ij q^a p^b     (b >= 0)
struct BasisSymbol {
  AlgebraKind kind = AlgebraKind::gl;
  int i = 0;
  int j = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
  friend auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;

  static BasisSymbol gl(int i, int j) { return {AlgebraKind::gl, i, j, 0, 0}; }
  static BasisSymbol loop(int i, int j, std::int64_t m) { return {AlgebraKind::loop, i, j, m, 0}; }
  static BasisSymbol witt(std::int64_t m) { return {AlgebraKind::witt, 0, 0, m, 0}; }
  static BasisSymbol qtorus(int i, int j, std::int64_t m, std::int64_t n) { return {AlgebraKind::qtorus, i, j, m, n}; }
  static BasisSymbol weyl(int i, int j, std::int64_t k, std::int64_t l) { return {AlgebraKind::weyl, i, j, k, l}; }
};

/// Finitely supported map Key -> Scalar with no stored zeros.
template <class Key>
class SparseMap {
 public:
  using container = std::map<Key, Scalar>;
  using const_iterator = typename container::const_iterator;

  SparseMap() = default;
  SparseMap(const Key& k, const Scalar& c) { add(k, c); }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const SparseMap& other, const Scalar& factor) {
    if (factor.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, c * factor);
  }

  [[nodiscard]] Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const_iterator begin() const { return terms_.begin(); }
  [[nodiscard]] const_iterator end() const { return terms_.end(); }
  [[nodiscard]] const container& terms() const { return terms_; }

  SparseMap& operator+=(const SparseMap& o) { add_scaled(o, Scalar(1)); return *this; }
  SparseMap& operator-=(const SparseMap& o) { add_scaled(o, Scalar(-1)); return *this; }
  SparseMap& operator*=(const Scalar& f) {
    if (f.is_zero()) { terms_.clear(); return *this; }
    for (auto& [k, c] : terms_) c *= f;
    return *this;
  }

  friend SparseMap operator+(SparseMap a, const SparseMap& b) { return a += b; }
  friend SparseMap operator-(SparseMap a, const SparseMap& b) { return a -= b; }
  friend SparseMap operator*(const Scalar& f, SparseMap a) { return a *= f; }
  friend SparseMap operator*(SparseMap a, const Scalar& f) { return a *= f; }
  friend SparseMap operator-(SparseMap a) { return a *= Scalar(-1); }

  friend bool operator==(const SparseMap& a, const SparseMap& b) { return a.terms_ == b.terms_; }

 private:
  container terms_;
};

using LieElement = SparseMap<BasisSymbol>;
using SparseVector = SparseMap<Index>;

inline LieElement element(const BasisSymbol& s, const Scalar& c = Scalar(1)) { return LieElement(s, c); }

}  // namespace fockrep
