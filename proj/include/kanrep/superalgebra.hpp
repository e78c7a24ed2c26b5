#pragma once

#include "kanrep/action.hpp"
#include "kanrep/report.hpp"
#include "kanrep/table.hpp"

namespace kanrep {

/// Structural invariants: every product term has the expected parity and,
/// if a unit is flagged, e_0 x = x e_0 = x on the basis.
CheckReport check_table_invariants(const StructureTable& table, const CheckOptions& options = {});

/// Reports every basis pair i <= j with e_i e_j != (-1)^{|i||j|} e_j e_i.
CheckReport check_supercommutative(const StructureTable& table, const CheckOptions& options = {});

/// Graded Jordan identity on all basis quadruples (x, y, z, t):
///
///   ((xy)z)t + (-1)^{|y||z|+|y||t|+|z||t|} ((xt)z)y
///            + (-1)^{|x||y|+|x||z|+|x||t|+|z||t|} ((yt)z)x
///   = (xy)(zt) + (-1)^{|y||z|} (xz)(yt) + (-1)^{|t|(|y|+|z|)} (xt)(yz)
///
/// The identity is multilinear, so basis tuples suffice.
CheckReport check_jordan_superidentity(const StructureTable& table, const CheckOptions& options = {});

/// (a,d,b)c - (-1)^{|b||c|}(a,dc,b) + (-1)^{|a||d|+|b||c|}d(a,c,b) = 0 with
/// (a,b,c) = (ab)c - a(bc), on all basis quadruples.  This is the graded
/// form of the statement that x -> (a,x,b) is a derivation.
CheckReport check_super_associator_identity(const StructureTable& table, const CheckOptions& options = {});

/// Operator relations implied by the Jordan identity for a right action,
/// with [A,B]_s = AB - (-1)^{|A||B|} BA and operator words applied left to
/// right:
///
///   R_y R_z R_t + (-1)^{|y||z|+|y||t|+|z||t|} R_t R_z R_y + (-1)^{|z||t|} R_{(yt)z}
///     = R_y R_{zt} + (-1)^{|y||z|} R_z R_{yt} + (-1)^{|t||yz|} R_t R_{yz}
///
///   [R_{xy}, R_z]_s + (-1)^{|y||z|} [R_{xz}, R_y]_s + (-1)^{|x||yz|} [R_{yz}, R_x]_s = 0
///
/// checked on every basis triple and every module basis vector.
CheckReport check_operator_relations(const BimoduleAction& action, const CheckOptions& options = {});

}  // namespace kanrep
