#pragma once

#include <cstdint>
#include <optional>

#include "entcoh/galois.hpp"

namespace entcoh {

/// Caps on the size of anything materialized per degree. Overridable via the
/// ENTCOH_MAX_ENTRIES environment variable and the CLI flag.
struct ResourceCaps {
  std::size_t max_entries = 1'000'000;
  static ResourceCaps from_env();
  void guard(std::size_t entries, std::size_t degree,
             const char* what) const;
};

/// Complex of free A-bimodules A (x) G_n (x) A augmented over a target
/// bimodule. Since every differential is a bimodule map it is stored
/// restricted to generators: diff[n] maps G_n into the coordinates of
/// A (x) G_{n-1} (x) A, flattened ((k * g_{n-1} + j) * dim(A) + l).
struct FreeBimoduleComplex {
  Algebra algebra;
  Bimodule target;               // augmentation target with its actions
  std::vector<std::size_t> gen_dims;  // degree 0 .. n_max
  Matrix aug;                    // target.dim x gen_dims[0]
  std::vector<Matrix> diff;      // diff[n] for n >= 1; diff[0] is unused

  std::size_t max_degree() const { return gen_dims.size() - 1; }
  std::size_t component_dim(std::size_t n) const {
    return algebra.dim * gen_dims[n] * algebra.dim;
  }
  /// Expand the restricted differential (or, for n = 0, the augmentation)
  /// to the full matrix on components.
  Matrix full_differential(std::size_t n) const;
  /// Realize component n as an explicit Bimodule (outer-leg actions).
  Bimodule component_bimodule(std::size_t n) const;
};

/// Verifies d(n) . d(n+1) = 0 for all stored degrees (exact).
void verify_complex(const FreeBimoduleComplex& fc);

/// Homology of the augmented complex ... -> comp_1 -> comp_0 -> target -> 0
/// vanishes at the target and at comp_0 .. comp_{up_to}. Needs
/// up_to + 1 <= max_degree.
bool augmented_complex_exact(const FreeBimoduleComplex& fc,
                             std::size_t up_to);

FreeBimoduleComplex bar_resolution(const Algebra& a, std::size_t n_max,
                                   const ResourceCaps& caps = {});

/// B^psi_*(A) = (A (x) C) (x)_A B_*(A): components (A (x) C) (x) A^n (x) A,
/// generators C (x) A^n, face 0 through the psi-twisted right action.
FreeBimoduleComplex entwined_complex(const Entwining& e, std::size_t n_max,
                                     const ResourceCaps& caps = {});

/// (A (x)_B A) (x)_A B_*(A) for a Galois extension: the same shape of
/// complex with A (x) C replaced by the quotient A (x)_B A. Generators are
/// found as a left-free basis of the quotient from its multiplication
/// tables alone, so the construction shares no data with canonical_psi.
FreeBimoduleComplex quotient_complex(const GaloisExtension& ext,
                                     std::size_t n_max,
                                     const ResourceCaps& caps = {});

struct CochainComplex {
  std::vector<std::size_t> dims;  // degree 0 .. N
  std::vector<Matrix> diff;       // diff[n]: dims[n+1] x dims[n], n < N
};

/// Hom_{A^e}(component, M) via freeness: C^n = maps(G_n, M).
CochainComplex hom_free(const FreeBimoduleComplex& fc, const Bimodule& m,
                        const ResourceCaps& caps = {});

/// Basis of bimodule maps P -> M as a matrix whose columns are maps
/// flattened by (p, m) |-> p * dim(M) + m.
Matrix hom_bimodule(const Bimodule& p, const Bimodule& m);

struct CohomologyTable {
  std::vector<std::size_t> dims;  // h^0 .. h^n_max
  /// True when one extra degree was computed so the last entry is genuine
  /// rather than a truncation artifact.
  bool edge_exact = false;
};

CohomologyTable cohomology_dims(const Field& f, const CochainComplex& cc);

CohomologyTable entwined_cohomology(const Entwining& e, const Bimodule& m,
                                    std::size_t n_max,
                                    const ResourceCaps& caps = {});

CohomologyTable hochschild_cohomology(const Algebra& b, const Bimodule& m,
                                      std::size_t n_max,
                                      const ResourceCaps& caps = {});

/// Same dimension table computed from the quotient complex; together with
/// entwined_cohomology this is the two-route consistency check behind the
/// theorem's identification of the two Ext groups.
CohomologyTable quotient_cohomology(const GaloisExtension& ext,
                                    const Bimodule& m, std::size_t n_max,
                                    const ResourceCaps& caps = {});

enum class ModuleSide { left, right, bi };

/// Finite-dimensional module over a field: flat iff projective iff the
/// canonical surjection from the free module on its basis splits; the
/// splitting system is solved exactly.
bool is_projective_module(const Bimodule& mod, ModuleSide side);

Algebra enveloping_algebra(const Algebra& a);

struct TheoremReport {
  std::size_t h0_psi = 0;
  std::size_t h0_b = 0;
  bool h0_match = false;
  bool flat_left = false;
  bool flat_right = false;
  CohomologyTable table_psi;
  CohomologyTable table_hh;
  bool flatness_applies = false;  // flat_left || flat_right
  bool tables_match = false;      // asserted only when flatness applies
  bool verified() const {
    return h0_match && (!flatness_applies || tables_match);
  }
};

TheoremReport verify_theorem(const GaloisExtension& ext, const Bimodule& m,
                             std::size_t n_max,
                             const ResourceCaps& caps = {});

}  // namespace entcoh
