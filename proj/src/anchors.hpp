#pragma once

namespace burnloops::anchor {

inline constexpr const char* kConstruction = "constructions of B_4n and C_4n as Burn loops";
inline constexpr const char* kUnitChoice = "other choices of the unit element give isomorphic loops";
inline constexpr const char* kNucleusNormal = "lemma: the left nucleus is a normal subgroup";
inline constexpr const char* kGRightNormal = "G_right(L) is a normal subgroup of M(L)";
inline constexpr const char* kQuotient = "remark: every element of L/N_lambda has order 2";
inline constexpr const char* kSquares = "squares lie in the left and middle nuclei, which coincide";
inline constexpr const char* kKUnion = "lemma: K is the union of the H_k, ker Phi normal in G(L)";
inline constexpr const char* kKernelInNucleus = "K is contained in S(N_lambda)";
inline constexpr const char* kKongr = "lemma: commutator congruences modulo H_2";
inline constexpr const char* kHs1 = "proposition: ker Phi = H_(s-1) for s >= 3";
inline constexpr const char* kKerfi = "proposition: s in {1, 2, 4} and ker Phi = [S(N_lambda), G(L)]";
inline constexpr const char* kCorollary = "corollary: for a group, ker Phi = H_2 = L'";
inline constexpr const char* kEkvik = "lemma: equivalent section conditions on coset representatives";
inline constexpr const char* kYorbit = "lemma: the orbits 1^F and 1^U coincide";
inline constexpr const char* kAbelLam = "lemma: Phi^-1(U) is Abelian for Abelian U containing S(N_lambda)";
inline constexpr const char* kReflections = "Bol reflections: sigma_x sigma_1 = (p_x, lambda_x), Sigma invariant in N+";
inline constexpr const char* kNdef = "Phi maps (p_x, lambda_x) to lambda_x";
inline constexpr const char* kKernelTable = "table: the kernel of Phi and the orbit of the y-axis under N";
inline constexpr const char* kDecomposition = "reflection theorem: N = ker Phi x| G-bar";
inline constexpr const char* kSigmaAction = "reflection theorem: action of sigma_1 on N";
inline constexpr const char* kB8Trivial = "reflection theorem proof: sigma_1 acts trivially on N for B_8";
inline constexpr const char* kCenter = "reflection theorem: Z(N+) case list";
inline constexpr const char* kCore = "reflection theorem: G_core is isomorphic to N+/Z(N+)";
inline constexpr const char* kCoreIdentities = "core identities and the isomorphic core groupoids";
inline constexpr const char* kGensTable = "table: generating elements for G(L) and N";
inline constexpr const char* kLoopAut = "loop automorphism theorem: aut(L) case list";
inline constexpr const char* kPseudo = "loop automorphism theorem: left pseudo-automorphisms are automorphisms";
inline constexpr const char* kIsotopes = "loop automorphism theorem proof: involutions in principal isotope sections";
inline constexpr const char* kCentOdd = "lemma: C_aut(G_8n)(beta) for n odd";
inline constexpr const char* kCentEven = "lemma: C_aut(G_8n)(beta) for n even";
inline constexpr const char* kCentH = "lemma: C_aut(H_8n)(beta) for n > 2 even";
inline constexpr const char* kLambda0 = "Lambda_0 is the only Abelian subgroup of index 2 in G(L)";
inline constexpr const char* kOrbitP = "orbit P of the origin: |P| = 4n^2, a union of vertical lines";
inline constexpr const char* kMLemma = "lemma: M is Abelian, isomorphic to N_lambda x Lambda_0, regular on P";
inline constexpr const char* kGamma = "collineation theorem: Gamma = M x| aut(L)";
inline constexpr const char* kGammaReading = "full versus direction preserving collineation group";
inline constexpr const char* kGroupNet = "remark: for a group G, Gamma = (G x G) x| aut(G)";

}  // namespace burnloops::anchor
