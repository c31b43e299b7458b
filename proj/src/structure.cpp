#include "gsf/structure.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace gsf {

  namespace {
    std::string generated_element_name(std::size_t i, std::size_t n) {
      if (n <= 26) {
        return std::string(1, static_cast<char>('a' + i));
      }
      return "x" + std::to_string(i);
    }

    std::string generated_gamma_name(std::size_t i, std::size_t k) {
      return k == 1 ? std::string("g") : "g" + std::to_string(i + 1);
    }

    template <typename Names>
    void require_unique(Names const& names, char const* what) {
      std::unordered_set<std::string> seen;
      for (auto const& name : names) {
        if (!seen.insert(name).second) {
          throw Error(ErrorCode::duplicate_name,
                      std::string(what) + " '" + name + "' declared twice");
        }
      }
    }

    std::string describe(AssociativityWitness const&     w,
                         std::vector<std::string> const& elements,
                         std::vector<std::string> const& gammas) {
      auto e = [&](Element i) {
        return i < elements.size() ? elements[i] : "x" + std::to_string(i);
      };
      auto g = [&](GammaIndex i) {
        return i < gammas.size() ? gammas[i] : "g" + std::to_string(i);
      };
      return "(" + e(w.x) + " " + g(w.beta) + " " + e(w.y) + ") " + g(w.gamma) + " "
             + e(w.z) + " = " + e(w.left) + " but " + e(w.x) + " " + g(w.beta) + " ("
             + e(w.y) + " " + g(w.gamma) + " " + e(w.z) + ") = " + e(w.right);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // CrispSubset
  ////////////////////////////////////////////////////////////////////////

  CrispSubset::CrispSubset(std::size_t                    universe,
                           std::initializer_list<Element> members)
      : _bits(universe, false) {
    for (auto x : members) {
      insert(x);
    }
  }

  CrispSubset CrispSubset::full(std::size_t universe) {
    CrispSubset out(universe);
    out._bits.assign(universe, true);
    return out;
  }

  CrispSubset CrispSubset::from_mask(std::size_t universe, std::uint64_t mask) {
    CrispSubset out(universe);
    for (std::size_t i = 0; i < universe && i < 64; ++i) {
      out._bits[i] = ((mask >> i) & 1U) != 0;
    }
    return out;
  }

  void CrispSubset::insert(Element x) {
    if (x >= _bits.size()) {
      throw Error(ErrorCode::index_out_of_range,
                  "element index " + std::to_string(x) + " >= "
                      + std::to_string(_bits.size()));
    }
    _bits[x] = true;
  }

  std::size_t CrispSubset::count() const {
    return static_cast<std::size_t>(
        std::count(_bits.begin(), _bits.end(), true));
  }

  std::vector<Element> CrispSubset::members() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      if (_bits[i]) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::uint64_t CrispSubset::mask() const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < _bits.size() && i < 64; ++i) {
      if (_bits[i]) {
        out |= std::uint64_t{1} << i;
      }
    }
    return out;
  }

  bool CrispSubset::is_subset_of(CrispSubset const& other) const {
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      if (_bits[i] && !other.contains(i)) {
        return false;
      }
    }
    return true;
  }

  CrispSubset operator&(CrispSubset const& a, CrispSubset const& b) {
    CrispSubset out(a.universe());
    for (std::size_t i = 0; i < a.universe(); ++i) {
      out._bits[i] = a._bits[i] && b.contains(i);
    }
    return out;
  }

  CrispSubset operator|(CrispSubset const& a, CrispSubset const& b) {
    CrispSubset out(std::max(a.universe(), b.universe()));
    for (std::size_t i = 0; i < out.universe(); ++i) {
      out._bits[i] = a.contains(i) || b.contains(i);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // GammaSemigroup
  ////////////////////////////////////////////////////////////////////////

  AssociativityViolation::AssociativityViolation(AssociativityWitness const&     w,
                                                 std::vector<std::string> const& elements,
                                                 std::vector<std::string> const& gammas)
      : Error(ErrorCode::associativity_violation, describe(w, elements, gammas)),
        _witness(w) {}

  std::optional<AssociativityWitness>
  GammaSemigroup::find_associativity_violation(std::size_t               n,
                                               std::size_t               k,
                                               std::span<Element const> cube) {
    auto op = [&](Element x, GammaIndex g, Element y) {
      return cube[(x * k + g) * n + y];
    };
    for (Element x = 0; x < n; ++x) {
      for (GammaIndex beta = 0; beta < k; ++beta) {
        for (Element y = 0; y < n; ++y) {
          Element const xy = op(x, beta, y);
          for (GammaIndex gamma = 0; gamma < k; ++gamma) {
            for (Element z = 0; z < n; ++z) {
              Element const left  = op(xy, gamma, z);
              Element const right = op(x, beta, op(y, gamma, z));
              if (left != right) {
                return AssociativityWitness{x, beta, y, gamma, z, left, right};
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  GammaSemigroup GammaSemigroup::validate(std::vector<std::string> elements,
                                          std::vector<std::string> gammas,
                                          std::vector<Element>     cube) {
    if (elements.empty()) {
      throw Error(ErrorCode::empty_carrier, "no elements");
    }
    if (gammas.empty()) {
      throw Error(ErrorCode::empty_carrier, "no operation symbols");
    }
    require_unique(elements, "element");
    require_unique(gammas, "gamma");
    std::size_t const n = elements.size();
    std::size_t const k = gammas.size();
    if (cube.size() != n * k * n) {
      throw Error(ErrorCode::out_of_range_entry,
                  "cube has " + std::to_string(cube.size())
                      + " cells, expected " + std::to_string(n * k * n));
    }
    for (std::size_t i = 0; i < cube.size(); ++i) {
      if (cube[i] >= n) {
        throw Error(ErrorCode::out_of_range_entry,
                    "cell " + std::to_string(i) + " holds "
                        + std::to_string(cube[i]) + ", carrier has "
                        + std::to_string(n) + " elements");
      }
    }
    if (auto w = find_associativity_violation(n, k, cube)) {
      throw AssociativityViolation(*w, elements, gammas);
    }
    GammaSemigroup S;
    S._elements = std::move(elements);
    S._gammas   = std::move(gammas);
    S._cube     = std::move(cube);
    return S;
  }

  GammaSemigroup GammaSemigroup::from_cube(std::size_t          n,
                                           std::size_t          k,
                                           std::vector<Element> cube) {
    std::vector<std::string> elements, gammas;
    for (std::size_t i = 0; i < n; ++i) {
      elements.push_back(generated_element_name(i, n));
    }
    for (std::size_t i = 0; i < k; ++i) {
      gammas.push_back(generated_gamma_name(i, k));
    }
    return validate(std::move(elements), std::move(gammas), std::move(cube));
  }

  std::optional<Element>
  GammaSemigroup::element_index(std::string_view name) const {
    auto it = std::find(_elements.begin(), _elements.end(), name);
    if (it == _elements.end()) {
      return std::nullopt;
    }
    return static_cast<Element>(it - _elements.begin());
  }

  std::optional<GammaIndex>
  GammaSemigroup::gamma_index(std::string_view name) const {
    auto it = std::find(_gammas.begin(), _gammas.end(), name);
    if (it == _gammas.end()) {
      return std::nullopt;
    }
    return static_cast<GammaIndex>(it - _gammas.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // Crisp predicates
  ////////////////////////////////////////////////////////////////////////

  CrispSubset gamma_product(GammaSemigroup const& S,
                            CrispSubset const&    A,
                            CrispSubset const&    B) {
    CrispSubset out(S.size());
    for (Element a = 0; a < S.size(); ++a) {
      if (!A.contains(a)) {
        continue;
      }
      for (Element b = 0; b < S.size(); ++b) {
        if (!B.contains(b)) {
          continue;
        }
        for (GammaIndex g = 0; g < S.gamma_count(); ++g) {
          out.insert(S(a, g, b));
        }
      }
    }
    return out;
  }

  SubsetFlags classify_subset(GammaSemigroup const& S, CrispSubset const& A) {
    if (A.universe() > S.size()) {
      for (Element x = S.size(); x < A.universe(); ++x) {
        if (A.contains(x)) {
          throw Error(ErrorCode::index_out_of_range,
                      "subset member " + std::to_string(x)
                          + " outside carrier of size "
                          + std::to_string(S.size()));
        }
      }
    }
    SubsetFlags flags;
    if (A.empty()) {
      flags.empty = true;
      return flags;
    }
    auto const whole = CrispSubset::full(S.size());
    flags.subsemigroup = gamma_product(S, A, A).is_subset_of(A);
    flags.left_ideal   = gamma_product(S, whole, A).is_subset_of(A);
    flags.right_ideal  = gamma_product(S, A, whole).is_subset_of(A);
    flags.bi_ideal
        = flags.subsemigroup
          && gamma_product(S, gamma_product(S, A, whole), A).is_subset_of(A);
    return flags;
  }

  bool is_regular(GammaSemigroup const& S) {
    // a = a alpha x beta a for some x, alpha, beta
    for (Element a = 0; a < S.size(); ++a) {
      bool found = false;
      for (Element x = 0; x < S.size() && !found; ++x) {
        for (GammaIndex alpha = 0; alpha < S.gamma_count() && !found;
             ++alpha) {
          Element const ax = S(a, alpha, x);
          for (GammaIndex beta = 0; beta < S.gamma_count() && !found; ++beta) {
            found = S(ax, beta, a) == a;
          }
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool is_intra_regular(GammaSemigroup const& S) {
    // a = x alpha a beta a gamma y for some x, y, alpha, beta, gamma
    std::size_t const n = S.size();
    std::size_t const k = S.gamma_count();
    for (Element a = 0; a < n; ++a) {
      // Everything of the form x alpha a: the left multiples of a.
      CrispSubset left(n);
      for (Element x = 0; x < n; ++x) {
        for (GammaIndex alpha = 0; alpha < k; ++alpha) {
          left.insert(S(x, alpha, a));
        }
      }
      bool found = false;
      for (Element xa : left.members()) {
        for (GammaIndex beta = 0; beta < k && !found; ++beta) {
          Element const xaa = S(xa, beta, a);
          for (GammaIndex gamma = 0; gamma < k && !found; ++gamma) {
            for (Element y = 0; y < n && !found; ++y) {
              found = S(xaa, gamma, y) == a;
            }
          }
        }
        if (found) {
          break;
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  StructureFlags classify_structure(GammaSemigroup const& S,
                                    std::size_t subset_scan_limit) {
    std::size_t const n = S.size();
    if (n > subset_scan_limit || n >= 64) {
      throw Error(ErrorCode::carrier_too_large,
                  "duo check scans 2^" + std::to_string(n)
                      + " subsets; limit is 2^"
                      + std::to_string(subset_scan_limit));
    }
    StructureFlags flags;
    flags.regular       = is_regular(S);
    flags.intra_regular = is_intra_regular(S);
    flags.left_duo      = true;
    flags.right_duo     = true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      auto const A     = CrispSubset::from_mask(n, mask);
      auto const sides = classify_subset(S, A);
      if (sides.left_ideal && !sides.right_ideal) {
        flags.left_duo = false;
      }
      if (sides.right_ideal && !sides.left_ideal) {
        flags.right_duo = false;
      }
      if (!flags.left_duo && !flags.right_duo) {
        break;
      }
    }
    flags.duo = flags.left_duo && flags.right_duo;
    return flags;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism
  ////////////////////////////////////////////////////////////////////////

  HomomorphismViolation::HomomorphismViolation(HomomorphismWitness const& w,
                                               std::string const& message)
      : Error(ErrorCode::homomorphism_violation, message), _witness(w) {}

  Homomorphism Homomorphism::validate(StructurePtr         source,
                                      StructurePtr         target,
                                      std::vector<Element> map) {
    auto const& S = *source;
    auto const& T = *target;
    std::set<std::string> const source_gammas(S.gamma_names().begin(),
                                              S.gamma_names().end());
    std::set<std::string> const target_gammas(T.gamma_names().begin(),
                                              T.gamma_names().end());
    if (source_gammas != target_gammas) {
      throw Error(ErrorCode::gamma_mismatch,
                  "source and target have different operation symbols");
    }
    if (map.size() != S.size()) {
      throw Error(ErrorCode::index_out_of_range,
                  "map has " + std::to_string(map.size())
                      + " entries, source has " + std::to_string(S.size()));
    }
    for (auto image : map) {
      if (image >= T.size()) {
        throw Error(ErrorCode::index_out_of_range,
                    "map image " + std::to_string(image) + " outside target");
      }
    }
    std::vector<GammaIndex> gamma_map(S.gamma_count());
    for (GammaIndex g = 0; g < S.gamma_count(); ++g) {
      gamma_map[g] = *T.gamma_index(S.gamma_name(g));
    }
    for (Element x = 0; x < S.size(); ++x) {
      for (GammaIndex g = 0; g < S.gamma_count(); ++g) {
        for (Element y = 0; y < S.size(); ++y) {
          if (map[S(x, g, y)] != T(map[x], gamma_map[g], map[y])) {
            throw HomomorphismViolation(
                {x, g, y},
                "f(" + S.element_name(x) + " " + S.gamma_name(g) + " "
                    + S.element_name(y) + ") != f(" + S.element_name(x) + ") "
                    + S.gamma_name(g) + " f(" + S.element_name(y) + ")");
          }
        }
      }
    }
    Homomorphism f;
    f._source    = std::move(source);
    f._target    = std::move(target);
    f._map       = std::move(map);
    f._gamma_map = std::move(gamma_map);
    return f;
  }

  bool Homomorphism::is_surjective() const {
    CrispSubset hit(_target->size());
    for (auto image : _map) {
      hit.insert(image);
    }
    return hit.count() == _target->size();
  }

}  // namespace gsf
