#pragma once

// Realization data: the instance model (structure constants and module
// action on basis symbols), the statistics sign rho and the cut J.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fockrep/lie_element.hpp"

namespace fockrep {

enum class Statistics { bose, fermi };

struct InstanceConfig {
  AlgebraKind kind = AlgebraKind::witt;
  int n = 1;  // matrix size N; ignored for witt
  Scalar q = Scalar(1);  // qtorus only
  Statistics statistics = Statistics::bose;
  std::int64_t j_cut = 0;
};

/// Matrix entry x_target^source with source in J and target outside J.
struct Crossing {
  Index source;
  Index target;
  Scalar coeff;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Basis-level description of one catalog algebra acting on its module W.
/// Adding an instance means implementing this interface.
class InstanceModel {
 public:
  virtual ~InstanceModel() = default;

  [[nodiscard]] virtual AlgebraKind kind() const = 0;
  /// Throws std::invalid_argument for out-of-range parameters.
  virtual void validate(const BasisSymbol& s) const = 0;
  [[nodiscard]] virtual bool valid_index(const Index& alpha) const = 0;
  [[nodiscard]] virtual LieElement bracket(const BasisSymbol& x, const BasisSymbol& y) const = 0;
  /// x.w_alpha
  [[nodiscard]] virtual SparseVector act(const BasisSymbol& x, const Index& alpha) const = 0;
  /// The row of x at beta: alpha -> x_beta^alpha over all alpha with a nonzero entry.
  [[nodiscard]] virtual SparseVector row(const BasisSymbol& x, const Index& beta) const = 0;
  [[nodiscard]] virtual bool in_cut(const Index& alpha, std::int64_t cut) const = 0;
  /// Every nonzero x_gamma^alpha with alpha in J, gamma outside J.
  [[nodiscard]] virtual std::vector<Crossing> up_crossings(const BasisSymbol& x, std::int64_t cut) const = 0;
  /// All valid indices with exponent in [lo, hi].
  [[nodiscard]] virtual std::vector<Index> window(std::int64_t lo, std::int64_t hi) const = 0;
  [[nodiscard]] virtual std::string render_index(const Index& alpha) const = 0;
  [[nodiscard]] virtual std::string describe_cut(std::int64_t cut) const = 0;
};

class Realization {
 public:
  Realization(std::shared_ptr<const InstanceModel> model, InstanceConfig cfg)
      : model_(std::move(model)), cfg_(std::move(cfg)) {}

  [[nodiscard]] const InstanceModel& model() const { return *model_; }
  [[nodiscard]] const InstanceConfig& config() const { return cfg_; }
  [[nodiscard]] AlgebraKind kind() const { return model_->kind(); }

  /// -1 bosonic, +1 fermionic.
  [[nodiscard]] int rho() const { return cfg_.statistics == Statistics::bose ? -1 : 1; }
  [[nodiscard]] bool fermionic() const { return cfg_.statistics == Statistics::fermi; }
  /// -rho, the sign picked up by one transposition of generators.
  [[nodiscard]] int swap_sign() const { return -rho(); }

  [[nodiscard]] bool in_J(const Index& alpha) const { return model_->in_cut(alpha, cfg_.j_cut); }

  void require_same_kind(const BasisSymbol& s) const {
    if (s.kind != kind())
      throw std::invalid_argument("symbol of algebra '" + to_string(s.kind) + "' used with a '" +
                                  to_string(kind()) + "' realization");
  }
  void require_same_kind(const LieElement& x) const {
    for (const auto& [s, c] : x) require_same_kind(s);
  }

  [[nodiscard]] Realization with_statistics(Statistics st) const {
    InstanceConfig c = cfg_;
    c.statistics = st;
    return {model_, c};
  }

 private:
  std::shared_ptr<const InstanceModel> model_;
  InstanceConfig cfg_;
};

}  // namespace fockrep
