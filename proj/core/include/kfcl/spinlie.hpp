#pragma once

#include "kfcl/triality.hpp"

#include <string>
#include <vector>

namespace kfcl {

/// A generator set for one of the concrete spin algebras. S1 holds the 21
/// pair generators with equal second and third entries, S2 adds the 7
/// one-parameter generators, S3 holds all 36 elements as 16x16 skew blocks
/// over O + O (the S2 part embedded block-diagonally).
struct GeneratorSet {
  std::string name;                         // "S1", "S2" or "S3"
  std::vector<InfTriple> triples;           // S1, S2
  std::vector<Matrix> blocks;               // S3 only
  std::vector<std::pair<int, int>> labels;  // (i,j) pair; (i,0) single;
                                            // (0,0) plane rotation; (0,i) mixed

  bool is_block_set() const { return !blocks.empty(); }
  int size() const;
  /// Triples flatten to 192 components (a|b|c), blocks to 256.
  std::vector<Vector> flattened() const;
};

GeneratorSet gen_spin7();
GeneratorSet gen_spin8();
GeneratorSet gen_spin9();

/// diag(a, c): the tangent version of the line-preserving embedding of the
/// triple group into SO(16).
Matrix embed_block_diagonal(const InfTriple& t);

InfTriple bracket(const InfTriple& x, const InfTriple& y);
/// Plain commutator; both operands must be square of equal size.
Matrix bracket(const Matrix& x, const Matrix& y);

/// Max over generator pairs of distance(bracket, span(G)) / ||bracket||.
double closure_check(const GeneratorSet& g);

/// Basis of the 14 derivation triples (d, d, d), cut out of span(S1) by the
/// first-equals-second constraint. A computed dimension other than 14 throws
/// std::logic_error.
std::vector<InfTriple> g2_subalgebra();

/// Max over the 64 basis pairs of ||d(x y) - d(x) y - x d(y)||.
double derivation_residual(const Matrix& d);

/// Max deviation of the S1 first entries, expressed in reordered-basis
/// coordinates, from the closed 2(E_{ji} - E_{ij}) plane-rotation pattern.
double spin7_first_entry_pattern_residual();

struct CurveCheck {
  std::vector<double> span_distances;  // one per pair i < j
  double max_span_distance = 0.0;
  double max_oracle_residual = 0.0;    // raw d/dt of the second entry
                                       // against L_{e_j} L_{e_i}
};

/// Differentiates the triple products T(z'(t)) T(e_i) by central differences,
/// where T(z) = (L_z R_zbar, L_z, L_z) and z'(t) = cos(t) e_i + sin(t) e_j.
/// The curve passes through the central triple (I, -I, -I) at t = 0, so each
/// tangent is transported back to the identity (second and third entries
/// negated) before measuring its distance to span(S1).
CurveCheck curve_generator_crosscheck(double h = 1e-5);

/// exp(t J) with J = [[0, I], [-I, 0]] acting on O + O, in closed form.
Matrix spin9_rotation(double t);
/// exp(t J_i) with J_i = [[0, R_{e_i}], [R_{e_i}, 0]], in closed form.
Matrix spin9_partial_rotation(double t, int i);
Matrix spin9_J();
Matrix spin9_Ji(int i);

}  // namespace kfcl
