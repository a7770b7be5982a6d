// Frozen expected values for the mcat test suites.
//
// Every number here was derived independently of the engine before the engine
// was written: by closed forms documented inline, by the brute-force oracles
// in oracle.hpp (which recompute them at test time), or by hand.
// Tests compare engine output against BOTH this table and the oracles, so a
// drift in either direction fails loudly.
#pragma once

#include <array>
#include <cstddef>

namespace frozen {

// dim End(n strands) in the symmetric-group category = n!  (1-indexed by d).
inline constexpr std::array<std::size_t, 5> sym_dims = {0, 1, 2, 6, 24};

// Iwahori-Hecke algebra over Q(q): same dimension d! as the symmetric group
// (normal words of the oriented skein system biject with reduced words).
inline constexpr std::size_t hecke_dim_d2 = 2;
inline constexpr std::size_t hecke_dim_d3 = 6;

// Wreath product algebra A^{(x)d} x| S_d with A = Q[Z/2]: dim = 2^d * d!.
inline constexpr std::array<std::size_t, 4> wreath_z2_dims = {0, 2, 8, 48};

// Degenerate affine Hecke algebra, d = 2: cumulative normal-word counts
// through degree L equal sum_{sigma in S_2} #{(l1,l2): l1+l2 <= L - len(sigma)}
// = (L+1)^2 (polynomial part t1^l1 t2^l2 times a reduced word of S_2).
inline constexpr std::array<std::size_t, 7> daha_d2_cumulative = {1, 4, 9, 16, 25, 36, 49};

// Affine wreath algebra, A = Q[Z/2], d = 2: cumulative counts through L of the
// module k[x1,x2] (x) A^{(x)2} (x) kS_2 graded by deg t_i = deg u_i(g) =
// deg s = 1 (the identity token u(1) = 1 contributes no letter). Generating
// function (1+x)^3/(1-x)^2 => per-degree 1,5,12,20,28.
inline constexpr std::array<std::size_t, 5> awreath_z2_d2_cumulative = {1, 6, 18, 38, 66};

// Braid group algebra on 2 strands: group algebra of Z, basis sigma^k; words
// of length <= L in sigma, sigma^{-1} reduce to 2L+1 distinct powers.
inline constexpr std::array<std::size_t, 7> braid_d2_cumulative = {1, 3, 5, 7, 9, 11, 13};

// Symmetric group S_3 by Coxeter length: 1,2,2,1 -> total 6.
inline constexpr std::array<std::size_t, 7> sym_d3_counts = {1, 2, 2, 1, 0, 0, 0};

// One generator x with x^2 = 1, degree bound 5.
inline constexpr std::array<std::size_t, 6> x2_counts = {1, 1, 0, 0, 0, 0};

// Free algebra on 2 generators, degree bound 4.
inline constexpr std::array<std::size_t, 5> free2_counts = {1, 2, 4, 8, 16};

// linearize(symmetric, N): generator count, interchange-instance count,
// whiskered-instance count. Hand derivation:
//   generators (v,s,w) need |v|+2+|w| <= N;
//   involution instances (endpoint length 2) need |a|+2+|b| <= N;
//   braid instances (endpoint length 3) need |a|+3+|b| <= N;
//   interchange instances need |v|+2+|g|+2+|w'| <= N (first at N = 4).
struct LinearizeCounts { int max_len; std::size_t generators, interchange, whiskered; };
inline constexpr std::array<LinearizeCounts, 3> linearize_sym = {{
    {2, 1, 0, 1},   // {(1,s,1)}; involution at (1,1) only
    {3, 3, 0, 4},   // 3 involution frames + 1 braid frame
    {4, 6, 1, 9},   // 6 involution + 3 braid frames; 1 interchange instance
}};

// end_algebra generator/relation counts, derived by hand from the frame
// enumeration (see test comments for the per-family breakdown).
inline constexpr std::array<std::size_t, 5> endalg_sym_gens = {0, 0, 1, 2, 3};
inline constexpr std::array<std::size_t, 5> endalg_sym_rels = {0, 0, 1, 3, 6};
inline constexpr std::size_t endalg_braid_d2_gens = 2, endalg_braid_d2_rels = 2;
inline constexpr std::size_t endalg_braid_d3_gens = 4, endalg_braid_d3_rels = 5;
// wreath Z/2 d=2: gens = 1 crossing + 2 strands * 2 tokens = 5;
// rels = 1 involution + 2 slides + 8 token products + 2 units + 4 interchange.
inline constexpr std::size_t endalg_wreath_d2_gens = 5, endalg_wreath_d2_rels = 17;
// daha d=2: s,t0,t1; involution + dot-slide + t0t1 interchange.
inline constexpr std::size_t endalg_daha_d2_gens = 3, endalg_daha_d2_rels = 3;
// affine wreath Z/2 d=2: 7 gens; 1 involution + 2 slides + 8 products +
// 2 units + 4 dot-token commutes + 1 affine skein + 9 interchange = 27.
inline constexpr std::size_t endalg_awreath_d2_gens = 7, endalg_awreath_d2_rels = 27;

// hom-space quotient dims for the symmetric presentation, hom(2,2 strands):
// paths are powers of the crossing; span {s^(i+j+2) - s^(i+j)}.
inline constexpr std::size_t span_sym22_max2_paths = 3, span_sym22_max2_rank = 1, span_sym22_max2_dim = 2;
inline constexpr std::size_t span_sym22_max4_paths = 5, span_sym22_max4_rank = 3, span_sym22_max4_dim = 2;
inline constexpr std::size_t span_free22_max1_dim = 2;

// Canonical coefficient strings.
inline constexpr const char* str_half_plus_third = "5/6";
inline constexpr const char* str_q_minus_qinv = "(q^2 - 1)/q";
inline constexpr const char* str_qplus1 = "q + 1";

// Acceptance wall-clock bounds (seconds), one per criterion 1..9.
inline constexpr std::array<int, 10> criterion_seconds = {0, 30, 60, 60, 120, 60, 120, 30, 60, 30};

}  // namespace frozen
