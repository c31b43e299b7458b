#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsf/errors.hpp"

namespace gsf {

  using Element    = std::size_t;
  using GammaIndex = std::size_t;

  // Default bound on 2^n subset scans (duo checks, crisp enumeration).
  inline constexpr std::size_t default_subset_scan_limit = 16;

  // A finite subset of {0, ..., universe - 1}.
  class CrispSubset {
   public:
    CrispSubset() = default;
    explicit CrispSubset(std::size_t universe) : _bits(universe, false) {}
    CrispSubset(std::size_t universe, std::initializer_list<Element> members);

    static CrispSubset full(std::size_t universe);
    static CrispSubset from_mask(std::size_t universe, std::uint64_t mask);

    [[nodiscard]] std::size_t universe() const noexcept {
      return _bits.size();
    }
    [[nodiscard]] bool contains(Element x) const {
      return x < _bits.size() && _bits[x];
    }
    void insert(Element x);

    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool empty() const {
      return count() == 0;
    }
    [[nodiscard]] std::vector<Element> members() const;
    [[nodiscard]] std::uint64_t mask() const;
    [[nodiscard]] bool is_subset_of(CrispSubset const& other) const;

    friend CrispSubset operator&(CrispSubset const& a, CrispSubset const& b);
    friend CrispSubset operator|(CrispSubset const& a, CrispSubset const& b);
    friend bool operator==(CrispSubset const&, CrispSubset const&) = default;

   private:
    std::vector<bool> _bits;
  };

  struct AssociativityWitness {
    Element    x;
    GammaIndex beta;
    Element    y;
    GammaIndex gamma;
    Element    z;
    Element    left;   // (x beta y) gamma z
    Element    right;  // x beta (y gamma z)
  };

  class AssociativityViolation : public Error {
   public:
    /// Names default to x0, x1, ... and g0, g1, ... when not supplied.
    explicit AssociativityViolation(AssociativityWitness const&     w,
                                    std::vector<std::string> const& elements = {},
                                    std::vector<std::string> const& gammas   = {});
    [[nodiscard]] AssociativityWitness const& witness() const noexcept {
      return _witness;
    }

   private:
    AssociativityWitness _witness;
  };

  // A finite Gamma-semigroup: carrier S, operation symbols Gamma and the
  // ternary Cayley cube S x Gamma x S -> S. Instances only exist in validated
  // form, and are immutable.
  class GammaSemigroup {
   public:
    /// Validates closure and mixed associativity. `cube` is laid out as
    /// cube[(x * k + gamma) * n + y]. Throws Error(empty_carrier),
    /// Error(out_of_range_entry), Error(duplicate_name) or
    /// AssociativityViolation.
    static GammaSemigroup validate(std::vector<std::string> elements,
                                   std::vector<std::string> gammas,
                                   std::vector<Element>     cube);

    /// As above, with generated names: a, b, c, ... and g (or g1, g2, ...).
    static GammaSemigroup from_cube(std::size_t          n,
                                    std::size_t          k,
                                    std::vector<Element> cube);

    /// The first failing quintuple in (x, beta, y, gamma, z) order, if any.
    static std::optional<AssociativityWitness>
    find_associativity_violation(std::size_t               n,
                                 std::size_t               k,
                                 std::span<Element const> cube);

    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }
    [[nodiscard]] std::size_t gamma_count() const noexcept {
      return _gammas.size();
    }

    [[nodiscard]] Element operator()(Element x, GammaIndex g, Element y) const {
      return _cube[(x * _gammas.size() + g) * _elements.size() + y];
    }

    [[nodiscard]] std::vector<std::string> const& element_names() const {
      return _elements;
    }
    [[nodiscard]] std::vector<std::string> const& gamma_names() const {
      return _gammas;
    }
    [[nodiscard]] std::string const& element_name(Element x) const {
      return _elements.at(x);
    }
    [[nodiscard]] std::string const& gamma_name(GammaIndex g) const {
      return _gammas.at(g);
    }
    [[nodiscard]] std::optional<Element> element_index(std::string_view) const;
    [[nodiscard]] std::optional<GammaIndex> gamma_index(std::string_view) const;

    [[nodiscard]] std::span<Element const> cube() const noexcept {
      return _cube;
    }

    friend bool operator==(GammaSemigroup const&, GammaSemigroup const&)
        = default;

   private:
    GammaSemigroup() = default;

    std::vector<std::string> _elements;
    std::vector<std::string> _gammas;
    std::vector<Element>     _cube;
  };

  using StructurePtr = std::shared_ptr<GammaSemigroup const>;

  inline StructurePtr share(GammaSemigroup s) {
    return std::make_shared<GammaSemigroup const>(std::move(s));
  }

  // {a gamma b : a in A, b in B, gamma in Gamma}
  CrispSubset gamma_product(GammaSemigroup const& S,
                            CrispSubset const&    A,
                            CrispSubset const&    B);

  struct SubsetFlags {
    bool empty        = false;
    bool subsemigroup = false;
    bool left_ideal   = false;
    bool right_ideal  = false;
    bool bi_ideal     = false;
  };

  /// The empty set is reported with every flag false and `empty` set.
  /// Throws Error(index_out_of_range) if A is not a subset of S's carrier.
  SubsetFlags classify_subset(GammaSemigroup const& S, CrispSubset const& A);

  struct StructureFlags {
    bool regular       = false;
    bool intra_regular = false;
    bool left_duo      = false;
    bool right_duo     = false;
    bool duo           = false;
  };

  bool is_regular(GammaSemigroup const& S);
  bool is_intra_regular(GammaSemigroup const& S);

  /// Duo flags come from an exhaustive scan over all nonempty subsets, so
  /// this throws Error(carrier_too_large) when size() > subset_scan_limit.
  StructureFlags
  classify_structure(GammaSemigroup const& S,
                     std::size_t subset_scan_limit = default_subset_scan_limit);

  struct HomomorphismWitness {
    Element    x;
    GammaIndex gamma;  // index in the source
    Element    y;
  };

  class HomomorphismViolation : public Error {
   public:
    HomomorphismViolation(HomomorphismWitness const& w,
                          std::string const&         message);
    [[nodiscard]] HomomorphismWitness const& witness() const noexcept {
      return _witness;
    }

   private:
    HomomorphismWitness _witness;
  };

  // A validated map f : S -> S' with f(x gamma y) = f(x) gamma f(y). Source
  // and target share their Gamma by name; the index correspondence is kept.
  class Homomorphism {
   public:
    /// Throws Error(gamma_mismatch), Error(index_out_of_range) or
    /// HomomorphismViolation.
    static Homomorphism validate(StructurePtr         source,
                                 StructurePtr         target,
                                 std::vector<Element> map);

    [[nodiscard]] GammaSemigroup const& source() const {
      return *_source;
    }
    [[nodiscard]] GammaSemigroup const& target() const {
      return *_target;
    }
    [[nodiscard]] StructurePtr const& source_ptr() const noexcept {
      return _source;
    }
    [[nodiscard]] StructurePtr const& target_ptr() const noexcept {
      return _target;
    }
    [[nodiscard]] Element operator()(Element x) const {
      return _map[x];
    }
    [[nodiscard]] std::vector<Element> const& map() const noexcept {
      return _map;
    }
    [[nodiscard]] bool is_surjective() const;

   private:
    Homomorphism() = default;

    StructurePtr            _source;
    StructurePtr            _target;
    std::vector<Element>    _map;
    std::vector<GammaIndex> _gamma_map;
  };

}  // namespace gsf
